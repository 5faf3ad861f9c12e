#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "jacsys/unipoly.hpp"

using namespace jacsys;
using P = UniPoly<Rational>;

namespace {

P poly(std::vector<long> ascending) {
    std::vector<Rational> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.emplace_back(v);
    return P(std::move(cs));
}

P random_poly(std::mt19937& rng, long degree, bool monic) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    P out;
    for (long i = 0; i < degree; ++i)
        out.set_coeff(i, make_rational(num(rng), den(rng)));
    out.set_coeff(degree, monic ? Rational(1) : Rational(num(rng) * 2 + 1));
    return out;
}

// Cofactor expansion, used as an independent determinant oracle.
Rational det_cofactor(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("construction, degree and coefficient access") {
    P zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK_THROWS_AS(zero.leading(), DomainError);

    P c = poly({5});
    CHECK(c.degree() == 0);
    CHECK(c.leading() == 5);

    P p = poly({1, 0, 3});  // 3x^2 + 1
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);

    // Clearing the top coefficient re-trims the representation.
    p.set_coeff(2, 0);
    CHECK(p.degree() == 0);
    CHECK(p == poly({1}));

    CHECK(P::x() == poly({0, 1}));
    CHECK(P::monomial(3, Rational(2)) == poly({0, 0, 0, 2}));
    CHECK(P::monomial(3, Rational(0)).is_zero());
    CHECK_THROWS_AS(p.set_coeff(-1, Rational(1)), DomainError);
}

TEST_CASE("ring operations match hand convolution") {
    P a = poly({1, 2});      // 1 + 2x
    P b = poly({3, 0, 1});   // 3 + x^2
    CHECK(a * b == poly({3, 6, 1, 2}));
    CHECK(a + b == poly({4, 2, 1}));
    CHECK(b - a == poly({2, -2, 1}));
    CHECK(-a == poly({-1, -2}));
    CHECK(a * Rational(1, 2) == P(std::vector<Rational>{make_rational(1, 2), Rational(1)}));
    CHECK((a / Rational(2)) * Rational(2) == a);
    CHECK((a * P()).is_zero());

    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        P f = random_poly(rng, 4, false), g = random_poly(rng, 3, false),
          h = random_poly(rng, 2, false);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("division with quotient and remainder") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        P a = random_poly(rng, 6, false);
        P b = random_poly(rng, 3, true);
        auto [q, r] = divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }

    // Non-monic divisor over the field of rationals.
    P num = poly({-1, 0, 1});
    P den = poly({-2, 2});
    auto [q, r] = divrem(num, den);
    CHECK(r.is_zero());
    CHECK(q * den == num);

    CHECK_THROWS_AS(divrem(num, P()), DomainError);
    CHECK_THROWS_AS(div_exact(poly({1, 1}), poly({0, 1})), DomainError);
    CHECK(div_exact(poly({-1, 0, 1}), poly({1, 1})) == poly({-1, 1}));
    CHECK(rem(poly({1, 1, 1}), poly({0, 1})) == poly({1}));
}

TEST_CASE("gcd, extended gcd and monic normalization") {
    P f = poly({-1, 0, 0, 1});  // x^3 - 1
    P g = poly({-1, 0, 1});     // x^2 - 1
    CHECK(poly_gcd(f, g) == poly({-1, 1}));

    CHECK(make_monic(poly({2, 4})) == P(std::vector<Rational>{make_rational(1, 2), Rational(1)}));
    CHECK(make_monic(P()).is_zero());

    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        P a = random_poly(rng, 5, false);
        P b = random_poly(rng, 3, false);
        auto [d, s, u] = poly_ext_gcd(a, b);
        CHECK(s * a + u * b == d);
        CHECK(d == poly_gcd(a, b));
        if (!d.is_zero()) CHECK(d.leading() == 1);
    }
}

TEST_CASE("squarefree part and Yun decomposition") {
    P x = P::x();
    P f = x * (x - P(1)).pow(2) * (x + P(2)).pow(3);
    CHECK(squarefree_part(f) == x * (x - P(1)) * (x + P(2)));

    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::pair<P, int>{x, 1});
    CHECK(dec[1] == std::pair<P, int>{x - P(1), 2});
    CHECK(dec[2] == std::pair<P, int>{x + P(2), 3});

    // Already squarefree: the decomposition is the monic polynomial itself.
    P sq = poly({-2, 0, 1});
    auto dec2 = squarefree_decomposition(sq * Rational(3));
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0] == std::pair<P, int>{sq, 1});
    CHECK(squarefree_decomposition(P(5)).empty());
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    std::vector<std::vector<Rational>> m3 = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    CHECK(det_bareiss(m3) == -3);
    CHECK(det_bareiss<Rational>({{0, 1}, {1, 0}}) == -1);           // needs a row swap
    CHECK(det_bareiss<Rational>({{1, 2}, {2, 4}}) == 0);            // singular
    CHECK(det_bareiss<Rational>({{0, 0}, {1, 1}}) == 0);            // singular after swap
    CHECK(det_bareiss<Rational>({}) == 1);
    CHECK_THROWS_AS(det_bareiss<Rational>({{1, 2}}), DomainError);

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int t = 0; t < 15; ++t) {
        std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
        for (auto& row : m)
            for (auto& e : row) e = entry(rng);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("Sylvester resultant") {
    // (x^2-1, x^2-4): product of g over the roots +-1 of f.
    CHECK(sylvester_resultant(poly({-1, 0, 1}), poly({-4, 0, 1})) == 9);
    // Shared root kills the resultant.
    CHECK(sylvester_resultant(poly({-1, 1}), poly({-1, 0, 1})) == 0);
    // f = (x-2)(x+3), g = x^2+1: g(2)*g(-3) = 5*10.
    CHECK(sylvester_resultant(poly({-6, 1, 1}), poly({1, 0, 1})) == 50);
    // Constant against a polynomial: c^{deg}.
    CHECK(sylvester_resultant(poly({3}), poly({1, 0, 0, 1})) == 27);
    CHECK(sylvester_resultant(poly({1, 0, 0, 1}), poly({3})) == 27);
    CHECK(sylvester_resultant(P(), poly({1, 1})) == 0);
    CHECK_THROWS_AS(sylvester_resultant(poly({2}), poly({5})), DomainError);

    // Multiplicativity in the first argument.
    std::mt19937 rng(19);
    for (int t = 0; t < 10; ++t) {
        P f = random_poly(rng, 2, false), g = random_poly(rng, 2, false),
          h = random_poly(rng, 3, true);
        CHECK(sylvester_resultant(f * g, h) ==
              sylvester_resultant(f, h) * sylvester_resultant(g, h));
    }
}

TEST_CASE("composition, shift, argument scaling and evaluation") {
    P p = poly({5, 3, 1});  // x^2 + 3x + 5
    CHECK(p.shifted(Rational(1)) == poly({9, 5, 1}));
    CHECK(p.shifted(Rational(-1)).shifted(Rational(1)) == p);
    CHECK(p.scaled_arg(Rational(2)) == poly({5, 6, 4}));
    CHECK(p.compose(P::monomial(2, Rational(1))) == poly({5, 0, 3, 0, 1}));
    CHECK(p.eval(Rational(2)) == 15);
    CHECK(p.eval(2.0, [](const Rational& c) { return to_double(c); }) == 15.0);

    P d = p.derivative();
    CHECK(d == poly({3, 2}));
    CHECK(P(7).derivative().is_zero());

    CHECK(poly({1, 1}).pow(5) == poly({1, 5, 10, 10, 5, 1}));
    CHECK(poly({2, 1}).pow(0) == P(1));
    CHECK_THROWS_AS(poly({2, 1}).pow(-1), DomainError);
}

TEST_CASE("string rendering") {
    CHECK(P().str() == "0");
    CHECK(poly({-1, 0, 1}).str() == "x^2 - 1");
    P p;
    p.set_coeff(2, Rational(1));
    p.set_coeff(1, make_rational(-1, 2));
    p.set_coeff(0, Rational(-1));
    CHECK(p.str() == "x^2 - 1/2*x - 1");
    CHECK(poly({0, 1}).str("t") == "t");
}
