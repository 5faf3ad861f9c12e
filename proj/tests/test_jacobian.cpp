#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "jacsys/jacobian.hpp"
#include "jacsys/quotient.hpp"

using namespace jacsys;

namespace {

MultiPoly Z(int k) { return MultiPoly::variable(VarId::z(k)); }

std::map<VarId, Rational> random_rational_point(const std::vector<VarId>& vars,
                                                std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::map<VarId, Rational> pt;
    for (VarId v : vars) pt[v] = make_rational(num(rng), 4);
    return pt;
}

}  // namespace

TEST_CASE("closed-form matrix of the smallest system") {
    auto J = jacobian_formula(2, 3);
    REQUIRE(J.size() == 3);
    for (const auto& row : J) REQUIRE(row.size() == 3);

    CHECK(J[0][0].is_zero());
    CHECK(J[0][1] == MultiPoly(2));
    CHECK(J[0][2].is_zero());
    CHECK(J[1][0] == Z(-1) * Rational(2));
    CHECK(J[1][1].is_zero());
    CHECK(J[1][2] == MultiPoly(2));
    CHECK(J[2][0] == Z(-1) * Rational(6));
    CHECK(J[2][1].is_zero());
    CHECK(J[2][2] == MultiPoly(3));

    // Symbolic determinant collapses to a single linear term.
    MultiPoly det = det_exact(J);
    CHECK(det == Z(-1) * Rational(12));

    std::map<VarId, Rational> plus{{VarId::z(-1), make_rational(1, 2)}};
    std::map<VarId, Rational> minus{{VarId::z(-1), make_rational(-1, 2)}};
    CHECK(det.eval(plus) == 6);
    CHECK(det.eval(minus) == -6);
}

TEST_CASE("closed form agrees with direct differentiation") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(-3, 3);

    for (auto [n, m] : {std::pair<long, long>{2, 3}, {3, 4}, {2, 5}, {4, 3}}) {
        std::vector<Rational> lambdas(static_cast<std::size_t>(m + n - 1));
        lambdas[0] = 1;
        for (std::size_t i = 1; i < lambdas.size(); ++i) lambdas[i] = make_rational(num(rng), 2);

        EquationSet eqs = build_standard(n, m, lambdas, MultiPoly(0));
        auto direct = jacobian_direct(eqs);
        auto formula = jacobian_formula(n, m, lambdas);
        REQUIRE(direct.size() == formula.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
            REQUIRE(direct[i].size() == formula[i].size());
            for (std::size_t j = 0; j < direct[i].size(); ++j)
                CHECK(direct[i][j] == formula[i][j]);
        }
    }
}

TEST_CASE("coefficient derivative rule") {
    CHECK(coeff_partial(2, -2, -1, 3) == Z(-1) * Rational(2));
    CHECK(coeff_partial(2, -1, -2, 3) == MultiPoly(2));
    CHECK(coeff_partial(3, -1, -3, 3) == MultiPoly(3));
    CHECK(coeff_partial(3, -1, -1, 3) == Z(-1) * Rational(6));

    // Cross-check against the stored equations of the smallest system.
    EquationSet eqs = build_standard(2, 3);
    CHECK(eqs.equations[1].derivative(VarId::z(-1)) == coeff_partial(2, -2, -1, 3));
    CHECK(eqs.equations[0].derivative(VarId::z(-2)) == coeff_partial(2, -1, -2, 3));

    CHECK_THROWS_AS(coeff_partial(2, -5, -1, 3), TruncationError);
}

TEST_CASE("exact and floating determinants agree at random points") {
    std::mt19937 rng(37);
    auto J = jacobian_formula(3, 4);
    EquationSet eqs = build_standard(3, 4);

    for (int trial = 0; trial < 8; ++trial) {
        auto pt = random_rational_point(eqs.variables, rng);
        Rational exact = det_exact(eval_matrix(J, pt));

        std::map<VarId, std::complex<double>> cpt;
        for (const auto& [v, r] : pt) cpt[v] = {to_double(r), 0.0};
        std::complex<double> approx = det_lu(eval_matrix(
            J, cpt, [](const Rational& c) { return std::complex<double>(to_double(c), 0.0); }));

        CHECK(std::abs(approx - std::complex<double>(to_double(exact), 0.0)) <
              1e-9 * std::max(1.0, std::abs(to_double(exact))));
    }
}

TEST_CASE("determinant over an algebraic coefficient ring") {
    auto ring =
        QuotientRing::make(UniPoly<Rational>(std::vector<Rational>{make_rational(8, 3), 0, 1}));
    QuotientElement t = QuotientElement::generator(ring);

    auto J = jacobian_formula(2, 3);
    std::map<VarId, QuotientElement> pt{
        {VarId::z(-1), t * QuotientElement(make_rational(1, 2))},
        {VarId::z(-2), QuotientElement(0)},
        {VarId::z(-3), QuotientElement(make_rational(1, 3))},
    };
    auto M = eval_matrix(J, pt, [](const Rational& c) { return QuotientElement(c); });
    QuotientElement det = det_exact(M);
    CHECK(det == t * QuotientElement(6));
    CHECK_FALSE(det.is_zero());
}

TEST_CASE("floating determinant edge cases") {
    using C = std::complex<double>;
    CHECK(det_lu({{C(0), C(1)}, {C(1), C(0)}}) == C(-1));
    CHECK(det_lu({{C(1), C(2)}, {C(2), C(4)}}) == C(0));
    CHECK_THROWS_AS(det_lu({{C(1), C(2)}}), DomainError);
    CHECK(std::abs(det_lu({{C(0, 1), C(0)}, {C(0), C(0, 1)}}) - C(-1)) < 1e-15);
}

TEST_CASE("direct matrix covers non-standard builders") {
    EquationSet eqs = build_sparse(6, 4, 3);
    auto J = jacobian_direct(eqs);
    REQUIRE(J.size() == 3);
    REQUIRE(J[0].size() == 3);  // columns: Z_{-1}, Z_{-4}, Z_{-7}
    CHECK(J[1][0] == Z(-1) * Rational(2));  // d(Z_{-1}^2 + 2 Z_{-4})/d Z_{-1}
    CHECK(J[1][1] == MultiPoly(2));
    CHECK(J[1][2].is_zero());
    CHECK(J[2][2] == MultiPoly(2));
}
