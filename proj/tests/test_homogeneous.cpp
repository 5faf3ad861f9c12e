#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <variant>

#include "jacsys/homogeneous.hpp"

using namespace jacsys;
using P = UniPoly<Rational>;

namespace {

const MultiPoly L = MultiPoly::variable(VarId::lambda());
MultiPoly A(int i) { return MultiPoly::variable(VarId::aux(i)); }

P poly(std::vector<long> ascending) {
    std::vector<Rational> cs;
    for (long v : ascending) cs.emplace_back(v);
    return P(std::move(cs));
}

}  // namespace

TEST_CASE("reduction to the coefficient system") {
    EquationSet r23 = reduce_system(2, 3);
    REQUIRE(r23.equations.size() == 1);
    CHECK(r23.equations[0] == A(0) * A(0) * make_rational(3, 8) - L);
    REQUIRE(r23.variables.size() == 2);
    CHECK(r23.variables[0] == VarId::aux(0));
    CHECK(r23.variables[1] == VarId::lambda());
    CHECK(r23.spec.kind == SystemKind::Reduced);

    EquationSet r34 = reduce_system(3, 4);
    REQUIRE(r34.equations.size() == 2);
    CHECK(r34.equations[0] == A(0) * A(1) * make_rational(4, 9));
    CHECK(r34.equations[1] ==
          A(0) * A(0) * make_rational(2, 9) - A(1).pow(3) * make_rational(4, 81) - L);

    EquationSet r25 = reduce_system(2, 5);
    REQUIRE(r25.equations.size() == 1);
    CHECK(r25.equations[0] == A(0).pow(3) * make_rational(5, 16) - L);

    // One further pair in the n = 2 family: for m = 7 the single equation
    // is binom(7/2, 4) p0^4 - lambda = (35/128) p0^4 - lambda.
    EquationSet r27 = reduce_system(2, 7);
    REQUIRE(r27.equations.size() == 1);
    CHECK(r27.equations[0] == A(0).pow(4) * make_rational(35, 128) - L);
}

TEST_CASE("degenerate degree pairs carry their would-be equations") {
    try {
        reduce_system(2, 4);
        FAIL("expected DivisibilityError");
    } catch (const DivisibilityError& e) {
        REQUIRE(e.would_be_equations().size() == 1);
        CHECK(e.would_be_equations()[0] == -L);
    }
    CHECK_THROWS_AS(reduce_system(3, 6), DivisibilityError);
    CHECK_THROWS_AS(reduce_system(6, 3), DivisibilityError);
    CHECK_THROWS_AS(reduce_system(2, 2), DivisibilityError);
    CHECK_THROWS_AS(reduce_system(1, 3), DomainError);
}

TEST_CASE("root classification of rational polynomials") {
    // (x-1)(x+2)^2 (x^2+x+1)(x^2+1)(x^2-3)
    P h = poly({-1, 1}) * poly({2, 1}).pow(2) * poly({1, 1, 1}) * poly({1, 0, 1}) *
          poly({-3, 0, 1});
    auto split = split_univariate_roots(h);
    REQUIRE(split.rationals.size() == 2);
    CHECK(split.rationals[0] == -2);
    CHECK(split.rationals[1] == 1);

    REQUIRE(split.algebraic.size() == 3);
    CHECK(split.algebraic[0].first->cyclotomic_order() == 3u);
    CHECK(split.algebraic[1].first->cyclotomic_order() == 4u);
    CHECK(split.algebraic[0].second.size() == 2);
    CHECK(split.algebraic[1].second.size() == 2);
    // The leftover quadratic gets its own ring with both conjugate roots.
    CHECK(split.algebraic[2].first->modulus() == poly({-3, 0, 1}));
    REQUIRE(split.algebraic[2].second.size() == 2);
    CHECK(split.algebraic[2].second[0] + split.algebraic[2].second[1] == QuotientElement(0));
    CHECK(split.unresolved == P(1));
    CHECK(split.complete_enumeration);

    // A cubic with no rational or cyclotomic factor stays unresolved.
    auto split2 = split_univariate_roots(poly({-1, -1, 0, 1}) * poly({-2, 1}));
    REQUIRE(split2.rationals.size() == 1);
    CHECK(split2.rationals[0] == 2);
    CHECK(split2.algebraic.empty());
    CHECK(split2.unresolved == poly({-1, -1, 0, 1}));
    CHECK(split2.complete_enumeration);

    CHECK_THROWS_AS(split_univariate_roots(P()), DomainError);
}

TEST_CASE("solving the reduced system: rational case") {
    auto res = solve_reduced(2, 3, make_rational(3, 8));
    CHECK(res.exact);
    CHECK_FALSE(res.degenerate);
    REQUIRE(res.solutions.size() == 2);
    auto* a = std::get_if<RationalTuple>(&res.solutions[0]);
    auto* b = std::get_if<RationalTuple>(&res.solutions[1]);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->coords == std::vector<Rational>{-1});
    CHECK(b->coords == std::vector<Rational>{1});
}

TEST_CASE("solving the reduced system: degenerate target") {
    auto res = solve_reduced(2, 3, 0);
    CHECK(res.degenerate);
    CHECK(res.exact);
    REQUIRE(res.solutions.size() == 1);
    auto* a = std::get_if<RationalTuple>(&res.solutions[0]);
    REQUIRE(a);
    CHECK(a->coords == std::vector<Rational>{0});
}

TEST_CASE("solving the reduced system: conjugate pair") {
    auto res = solve_reduced(2, 3, make_rational(-3, 8));
    CHECK(res.exact);
    REQUIRE(res.solutions.size() == 2);
    auto* a = std::get_if<AlgebraicTuple>(&res.solutions[0]);
    auto* b = std::get_if<AlgebraicTuple>(&res.solutions[1]);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->ring->cyclotomic_order() == 4u);
    QuotientElement u = QuotientElement::generator(a->ring);
    CHECK(a->coords == std::vector<QuotientElement>{u});
    CHECK(b->coords == std::vector<QuotientElement>{-u});
}

TEST_CASE("solving the reduced system: mixed rational and cyclotomic") {
    auto res = solve_reduced(2, 5, make_rational(5, 16));
    CHECK(res.exact);
    REQUIRE(res.solutions.size() == 3);
    auto* r = std::get_if<RationalTuple>(&res.solutions[0]);
    REQUIRE(r);
    CHECK(r->coords == std::vector<Rational>{1});
    auto* a = std::get_if<AlgebraicTuple>(&res.solutions[1]);
    REQUIRE(a);
    CHECK(a->ring->cyclotomic_order() == 3u);
    QuotientElement u = QuotientElement::generator(a->ring);
    CHECK(a->coords == std::vector<QuotientElement>{u});
    auto* b = std::get_if<AlgebraicTuple>(&res.solutions[2]);
    REQUIRE(b);
    CHECK(b->coords == std::vector<QuotientElement>{-u - QuotientElement(1)});
}

TEST_CASE("solving the reduced system: two coordinates, numeric branches") {
    auto res = solve_reduced(3, 4, 1);
    CHECK_FALSE(res.exact);
    REQUIRE(res.solutions.size() == 5);

    // Coordinates are (p0, p1); the five tuples are p1 = 0 with
    // p0^2 = 9/2, and p0 = 0 with p1^3 = -81/4.
    const double s = std::sqrt(4.5);
    const double c = std::cbrt(81.0 / 4.0);
    int p1zero = 0, p0zero = 0;
    for (const auto& sol : res.solutions) {
        auto* z = std::get_if<ComplexTuple>(&sol);
        REQUIRE(z);
        REQUIRE(z->coords.size() == 2);
        Complex p0 = z->coords[0], p1 = z->coords[1];
        if (std::abs(p1) < 1e-9) {
            ++p1zero;
            CHECK(std::abs(std::abs(p0) - s) < 1e-9);
            CHECK(std::abs(p0.imag()) < 1e-9);
        } else {
            ++p0zero;
            CHECK(std::abs(p0) < 1e-9);
            CHECK(std::abs(std::abs(p1) - c) < 1e-9);
            CHECK(std::abs(p1 * p1 * p1 + Complex(81.0 / 4.0, 0)) < 1e-7);
        }
    }
    CHECK(p1zero == 2);
    CHECK(p0zero == 3);

    // The same seed reproduces the same tuples bit for bit.
    auto res2 = solve_reduced(3, 4, 1);
    REQUIRE(res2.solutions.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        auto* x = std::get_if<ComplexTuple>(&res.solutions[i]);
        auto* y = std::get_if<ComplexTuple>(&res2.solutions[i]);
        REQUIRE(x);
        REQUIRE(y);
        CHECK(x->coords == y->coords);
    }
}

TEST_CASE("series coefficients from a reduced tuple") {
    auto coeffs = coefficients_from_reduced<Rational>(2, 3, {1}, 9);
    std::vector<Rational> want{make_rational(1, 2),  0, make_rational(-1, 8),   0,
                               make_rational(1, 16), 0, make_rational(-5, 128), 0,
                               make_rational(7, 256)};
    CHECK(coeffs == want);

    // Default depth is m+n-2, and the result feeds the tail extension.
    auto head = coefficients_from_reduced<Rational>(2, 3, {1});
    REQUIRE(head.size() == 3);
    CHECK(extend_solution(2, 3, head, 9) == want);

    CHECK_THROWS_AS(coefficients_from_reduced<Rational>(2, 3, std::vector<Rational>{1, 2}),
                    DomainError);
    CHECK_THROWS_AS(coefficients_from_reduced<Rational>(2, 4, std::vector<Rational>{1}),
                    DomainError);
}

TEST_CASE("polynomial pair attached to a tuple") {
    auto pr = pair_from_tuple<Rational>(2, 3, {1});
    CHECK(pr.p == poly({1, 0, 1}));
    P wantq;
    wantq.set_coeff(3, 1);
    wantq.set_coeff(1, make_rational(3, 2));
    CHECK(pr.q == wantq);
    CHECK(pr.lambda_tail == make_rational(3, 8));

    // Scaling the tuple scales the tail by the weight of the datum slot.
    auto pr2 = pair_from_tuple<Rational>(2, 3, {2});
    CHECK(pr2.lambda_tail == make_rational(3, 8) * 4);

    auto cond = conditions_for_tuple<Rational>(2, 3, {1});
    CHECK(cond.wronskian_constant);
    CHECK(cond.bracket_homogeneous);
    CHECK(cond.power_difference);
    CHECK(cond.divisibility);
    CHECK(cond.all());
    CHECK(cond.lambda_tilde == -3);
    CHECK(cond.lambda_tail == make_rational(3, 8));
}

TEST_CASE("normalization with a rational scale") {
    P p;
    p.set_coeff(4, 1);
    p.set_coeff(1, make_rational(16, 3));
    P q;
    q.set_coeff(3, 1);
    q.set_coeff(0, 4);

    auto norm = normalize_inf_equiv(4, 3, p, q);
    CHECK_FALSE(norm.algebraic());
    CHECK(norm.lambda_tilde_input == 64);
    CHECK(norm.shift == 0);
    REQUIRE(norm.rational_scale.has_value());
    CHECK(*norm.rational_scale == 2);

    auto& pair = std::get<PolynomialPair<Rational>>(norm.pair);
    P wantp;
    wantp.set_coeff(4, 1);
    wantp.set_coeff(1, make_rational(2, 3));
    P wantq;
    wantq.set_coeff(3, 1);
    wantq.set_coeff(0, make_rational(1, 2));
    CHECK(pair.p == wantp);
    CHECK(pair.q == wantq);
    CHECK(pair.lambda_tail == make_rational(-1, 24));

    // Shifted input is recognized and unshifted first.
    auto norm2 = normalize_inf_equiv(4, 3, p.shifted(Rational(1)), q.shifted(Rational(1)));
    CHECK(norm2.shift == -1);
    CHECK(norm2.lambda_tilde_input == 64);
    REQUIRE(norm2.rational_scale.has_value());
    CHECK(std::get<PolynomialPair<Rational>>(norm2.pair).p == wantp);
}

TEST_CASE("normalization adjoining an algebraic scale") {
    auto pr = pair_from_tuple<Rational>(2, 3, {1});
    auto norm = normalize_inf_equiv(2, 3, pr.p, pr.q);
    CHECK(norm.algebraic());
    CHECK(norm.lambda_tilde_input == -3);
    CHECK(norm.shift == 0);
    CHECK_FALSE(norm.rational_scale.has_value());

    auto& pair = std::get<PolynomialPair<QuotientElement>>(norm.pair);
    auto ring = pair.p.coeff(0).ring();
    REQUIRE(ring);
    CHECK(ring->modulus() == poly({3, 0, 0, 0, 1}));  // t^4 + 3

    QuotientElement t = QuotientElement::generator(ring);
    UniPoly<QuotientElement> wantp;
    wantp.set_coeff(2, QuotientElement(1));
    wantp.set_coeff(0, t * t * QuotientElement(make_rational(-1, 3)));
    CHECK(pair.p == wantp);
    UniPoly<QuotientElement> wantq;
    wantq.set_coeff(3, QuotientElement(1));
    wantq.set_coeff(1, t * t * QuotientElement(make_rational(-1, 2)));
    CHECK(pair.q == wantq);
    CHECK(pair.lambda_tail == QuotientElement(make_rational(-1, 8)));
}

TEST_CASE("normalization error paths") {
    CHECK_THROWS_AS(normalize_inf_equiv(2, 3, poly({1, 0, 1}), poly({1, 1})), DomainError);
    CHECK_THROWS_AS(normalize_inf_equiv(2, 3, poly({1, 0, 2}), poly({0, 0, 0, 1})), DomainError);
    // Bracket not constant.
    P p = P::monomial(2, Rational(1));
    P q = P::monomial(3, Rational(1)) + P(1);
    CHECK_THROWS_AS(normalize_inf_equiv(2, 3, p, q), DomainError);
}

TEST_CASE("root-of-unity action on coefficient tuples") {
    std::vector<Rational> base{make_rational(1, 2), 0, make_rational(-1, 8)};
    auto acted = orbit_act(1, base, 4);
    CHECK(acted.ring->cyclotomic_order() == 4u);
    REQUIRE(acted.coords.size() == 3);
    // u^2 = -1 flips the first slot; the second is zero; the third gains u^0.
    CHECK(acted.coords[0] == QuotientElement(make_rational(-1, 2)));
    CHECK(acted.coords[1].is_zero());
    CHECK(acted.coords[2] == QuotientElement(make_rational(-1, 8)));

    // The acted tuple is the coefficient tuple of the opposite root value.
    auto opposite = coefficients_from_reduced<Rational>(2, 3, {-1});
    for (int i = 0; i < 3; ++i) {
        REQUIRE(acted.coords[i].is_rational());
        CHECK(acted.coords[i].as_rational() == opposite[i]);
    }

    // Identity, composition, and negative indices.
    auto id = orbit_act(4, base, 4);
    for (int i = 0; i < 3; ++i) CHECK(id.coords[i] == QuotientElement(base[i]));
    auto two_steps = orbit_act(1, orbit_act(1, base, 4).coords, 4);
    auto direct = orbit_act(2, base, 4);
    for (int i = 0; i < 3; ++i) CHECK(two_steps.coords[i] == direct.coords[i]);
    auto neg = orbit_act(-1, base, 4);
    auto three = orbit_act(3, base, 4);
    for (int i = 0; i < 3; ++i) CHECK(neg.coords[i] == three.coords[i]);

    CHECK_THROWS_AS(orbit_act(1, base, 0), DomainError);
}

TEST_CASE("cyclotomic embeddings") {
    auto c3 = QuotientRing::cyclotomic(3);
    auto c6 = QuotientRing::cyclotomic(6);
    QuotientElement u3 = QuotientElement::generator(c3);
    QuotientElement u6 = QuotientElement::generator(c6);

    CHECK(embed_cyclotomic(u3, c6) == u6.pow(2));
    CHECK(embed_cyclotomic(u3 + QuotientElement(1), c6) == u6.pow(2) + QuotientElement(1));
    CHECK(embed_cyclotomic(QuotientElement(make_rational(5, 7)), c6) ==
          QuotientElement(make_rational(5, 7)));

    auto plain = QuotientRing::make(poly({3, 0, 1}));
    CHECK_THROWS_AS(embed_cyclotomic(u3, plain), DomainError);
    CHECK_THROWS_AS(embed_cyclotomic(QuotientElement::generator(plain), c6), DomainError);
    auto c4 = QuotientRing::cyclotomic(4);
    CHECK_THROWS_AS(embed_cyclotomic(QuotientElement::generator(c4), c6), DomainError);
}

TEST_CASE("tuple descriptions") {
    CHECK(describe(RationalTuple{{make_rational(1, 2), Rational(-1)}}) == "(1/2, -1)");
    auto c4 = QuotientRing::cyclotomic(4);
    QuotientElement u = QuotientElement::generator(c4);
    CHECK(describe(AlgebraicTuple{c4, {u}}) == "(u) in Q[u]/(u^2 + 1)");
    CHECK(describe(ComplexTuple{{Complex(1, -2)}}) == "(1-2i)");
}
