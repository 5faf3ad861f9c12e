#pragma once

// Construction of the polynomial systems attached to a pair of degrees
// (n, m) with n not dividing m and m not dividing n.
//
// The unknowns are the coefficients of a monic series
//     Z = x^r + Z_{r-2} x^{r-2} + Z_{r-3} x^{r-3} + ...
// (the x^{r-1} slot is always absent; r = 1 gives the classical shape
// Z = x + Z_{-1}x^{-1} + ...).  Four builders share this core:
//
//   build_standard     m-1 equations (Z^n)_{-k} = 0, then n-2 equations
//                      (sum_i lambda_i Z^{m-i})_{-k} = 0, and the datum
//                      equation (sum_i lambda_i Z^{m-i})_{1-n} + F = 0.
//   build_homogeneous  lambda = (1,0,...,0) and datum Y^{m+n-1}; carries
//                      the weight grading w(Z_j) = 1-j, w(Y) = 1.
//   build_generalized  the modified families: blocks (Z^n)_{-k} for
//                      k = 1..rm-1 and (Z^m + tau Z^{-1})_{-k} for
//                      k = 1..rn-1, with a formal tail scalar tau.
//   build_sparse       support restricted to exponents congruent to r
//                      mod d; see the function comment for the exact
//                      equation windows.
//
// extend_solution implements the tail recursion: once the first m+n-2
// coefficients are chosen, each further coefficient is forced linearly by
// the next vanishing condition on (Z^n).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace jacsys {

// Cap on the symbolic expansion degree a builder may request; guards the
// CLI against accidentally huge inputs.
inline long max_symbolic_degree() {
    if (const char* env = std::getenv("JS_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 64;
}

enum class SystemKind { Standard, Homogeneous, Generalized, Sparse, Reduced };

struct SystemSpec {
    long n = 0;
    long m = 0;
    SystemKind kind = SystemKind::Standard;
    std::vector<Rational> lambdas;        // lambda_0..lambda_{m+n-2}
    MultiPoly datum;                      // added to the last equation
    long lead_exponent = 1;               // r
    long support_step = 1;                // d (sparse builder)
};

struct EquationSet {
    SystemSpec spec;
    std::vector<VarId> variables;         // series unknowns, highest slot first
    std::vector<MultiPoly> equations;
    std::map<VarId, long> weights;        // populated for the homogeneous system
};

namespace detail {

inline void require_nondivisible(long n, long m) {
    if (n < 2 || m < 2 || n == m || m % n == 0 || n % m == 0)
        throw DomainError("degrees must be >= 2 with neither dividing the other");
}

inline void require_within_cap(long degree_demand) {
    long cap = max_symbolic_degree();
    if (degree_demand > cap)
        throw DomainError("symbolic expansion degree " + std::to_string(degree_demand) +
                          " exceeds JS_MAX_DEGREE = " + std::to_string(cap));
}

// Pad/validate a lambda vector: lambda_0 = 1 and length m+n-1.
inline std::vector<Rational> normalized_lambdas(long n, long m, std::vector<Rational> lambdas) {
    const std::size_t want = static_cast<std::size_t>(m + n - 1);
    if (lambdas.empty()) {
        lambdas.assign(want, 0);
        lambdas[0] = 1;
    }
    if (lambdas.size() > want) throw DomainError("too many lambda coefficients");
    lambdas.resize(want, 0);
    if (lambdas[0] != 1) throw DomainError("lambda_0 must equal 1");
    return lambdas;
}

// Append Y and the formal scalars occurring in the equations after the
// series unknowns, in canonical variable order.
inline void append_non_series_vars(EquationSet& eqs) {
    std::set<VarId> extra;
    for (const auto& eq : eqs.equations)
        for (VarId v : eq.vars())
            if (v.kind != VarId::Z) extra.insert(v);
    for (VarId v : extra)
        if (std::find(eqs.variables.begin(), eqs.variables.end(), v) == eqs.variables.end())
            eqs.variables.push_back(v);
}

// Monic symbolic series x^r + sum of Z_j x^j for the `count` slots
// j = r-2, r-3, ..., truncated exactly at the last slot.
inline LaurentSeries<MultiPoly> symbolic_series(long r, long count,
                                                std::vector<VarId>* vars_out) {
    LaurentSeries<MultiPoly> Z = LaurentSeries<MultiPoly>::x_power(r);
    long j = r - 2;
    for (long i = 0; i < count; ++i, --j) {
        VarId v = VarId::z(static_cast<int>(j));
        Z.set_coeff(j, MultiPoly::variable(v));
        if (vars_out) vars_out->push_back(v);
    }
    return Z.truncated(r - 1 - count);
}

}  // namespace detail

inline std::vector<Rational> unit_lambdas(long n, long m) {
    std::vector<Rational> l(static_cast<std::size_t>(m + n - 1), 0);
    l[0] = 1;
    return l;
}

inline MultiPoly formal_datum() { return MultiPoly::variable(VarId::datum()); }
inline MultiPoly formal_lambda() { return MultiPoly::variable(VarId::lambda()); }

// The standard system: m+n-2 equations in Z_{-1}, ..., Z_{-(m+n-2)}.
inline EquationSet build_standard(long n, long m, std::vector<Rational> lambdas,
                                  MultiPoly datum) {
    detail::require_nondivisible(n, m);
    detail::require_within_cap(m + n);
    lambdas = detail::normalized_lambdas(n, m, std::move(lambdas));

    EquationSet out;
    out.spec = {n, m, SystemKind::Standard, lambdas, datum, 1, 1};
    LaurentSeries<MultiPoly> Z = detail::symbolic_series(1, m + n - 2, &out.variables);

    auto Zn = Z.pow(n, 1 - m);
    for (long k = 1; k <= m - 1; ++k) out.equations.push_back(Zn.coeff(-k));

    LaurentSeries<MultiPoly> S(1 - n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == 0) continue;
        S += Z.pow(m - static_cast<long>(i), 1 - n) * MultiPoly(lambdas[i]);
    }
    for (long k = 1; k <= n - 2; ++k) out.equations.push_back(S.coeff(-k));
    out.equations.push_back(S.coeff(1 - n) + datum);
    detail::append_non_series_vars(out);
    return out;
}

inline EquationSet build_standard(long n, long m) {
    return build_standard(n, m, unit_lambdas(n, m), formal_datum());
}

// Homogeneous datum Y^{m+n-1}; every equation is weighted homogeneous
// under the grading w(Z_j) = 1-j, w(Y) = 1.
inline EquationSet build_homogeneous(long n, long m) {
    MultiPoly datum = MultiPoly::term(Monomial::var(VarId::y(), static_cast<int>(m + n - 1)), 1);
    EquationSet out = build_standard(n, m, unit_lambdas(n, m), datum);
    out.spec.kind = SystemKind::Homogeneous;
    for (VarId v : out.variables)
        if (v.kind == VarId::Z) out.weights[v] = 1 - v.index;
    out.weights[VarId::y()] = 1;
    return out;
}

// Modified families: series leading exponent r, blocks (Z^n)_{-k} for
// k = 1..rm-1 and (Z^m + tau * Z^{-1})_{-k} for k = 1..rn-1, where tau is
// the formal tail scalar.  r = 2 and r = 3 with (n, m) = (2, 3) are the
// catalogued fixture systems (8 and 13 equations).
inline EquationSet build_generalized(long n, long m, long r) {
    detail::require_nondivisible(n, m);
    if (r < 1) throw DomainError("lead exponent must be positive");
    detail::require_within_cap(r * (m + n));

    EquationSet out;
    out.spec = {n, m, SystemKind::Generalized, unit_lambdas(n, m), MultiPoly(), r, 1};
    const long count = r * (m + n) - 2;
    LaurentSeries<MultiPoly> Z = detail::symbolic_series(r, count, &out.variables);

    auto Zn = Z.pow(n, 1 - r * m);
    for (long k = 1; k <= r * m - 1; ++k) out.equations.push_back(Zn.coeff(-k));

    auto tail = Z.pow(-1, 1 - r * n) * formal_lambda();
    auto S = Z.pow(m, 1 - r * n) + tail;
    for (long k = 1; k <= r * n - 1; ++k) out.equations.push_back(S.coeff(-k));
    detail::append_non_series_vars(out);
    return out;
}

// Sparse support: with r = gcd(n, m) and a step d dividing m+n-1, d > r,
// where one degree is divisible by d and the other is 1 mod d, the series
// Z = x^r + Z_{r-d} x^{r-d} + ... + Z_{r-Nd} x^{r-Nd} (N = (m+n-1)/d)
// supports a square system: writing (a, b) for the degrees with a = 0 and
// b = 1 mod d,
//     (Z^{a/r})_{-dk}   = 0   for k = 1..(b-1)/d,
//     (Z^{b/r})_{-dk+1} = 0   for k = 1..a/d - 1,
//     (Z^{b/r})_{1-a} + datum = 0.
inline EquationSet build_sparse(long n, long m, long d, MultiPoly datum) {
    detail::require_nondivisible(n, m);
    const long r = std::gcd(n, m);
    const long e = m + n - 1;
    if (d <= r || e % d != 0)
        throw DomainError("step must exceed gcd(n, m) and divide m+n-1");
    long a, b;
    if (n % d == 0 && m % d == 1) { a = n; b = m; }
    else if (m % d == 0 && n % d == 1) { a = m; b = n; }
    else throw DomainError("degrees must be 0 and 1 mod the step");
    detail::require_within_cap(m + n);

    EquationSet out;
    out.spec = {n, m, SystemKind::Sparse, unit_lambdas(n, m), datum, r, d};
    const long N = e / d;
    LaurentSeries<MultiPoly> Z = LaurentSeries<MultiPoly>::x_power(r);
    for (long v = 1; v <= N; ++v) {
        VarId id = VarId::z(static_cast<int>(r - v * d));
        Z.set_coeff(r - v * d, MultiPoly::variable(id));
        out.variables.push_back(id);
    }
    Z = Z.truncated(r - N * d);

    auto Za = Z.pow(a / r, -a + 1);
    auto Zb = Z.pow(b / r, -a + 1);
    for (long k = 1; k <= (b - 1) / d; ++k) out.equations.push_back(Za.coeff(-d * k));
    for (long k = 1; k <= a / d - 1; ++k) out.equations.push_back(Zb.coeff(-d * k + 1));
    out.equations.push_back(Zb.coeff(1 - a) + datum);
    detail::append_non_series_vars(out);
    return out;
}

inline EquationSet build_sparse(long n, long m, long d) {
    return build_sparse(n, m, d, formal_lambda());
}

// Evaluate every equation at the given point; all occurring variables
// (including Y and the formal scalars, when present) must be bound.
template <typename T>
std::vector<T> residual(const EquationSet& eqs, const std::map<VarId, T>& point) {
    std::vector<T> out;
    out.reserve(eqs.equations.size());
    for (const auto& e : eqs.equations) out.push_back(e.eval(point));
    return out;
}

template <typename T, typename Cast>
std::vector<T> residual(const EquationSet& eqs, const std::map<VarId, T>& point, Cast cast) {
    std::vector<T> out;
    out.reserve(eqs.equations.size());
    for (const auto& e : eqs.equations) out.push_back(e.eval(point, cast));
    return out;
}

template <typename T>
std::map<VarId, T> make_point(const std::vector<VarId>& vars, const std::vector<T>& values) {
    if (vars.size() != values.size())
        throw DomainError("point arity does not match the variable list");
    std::map<VarId, T> out;
    for (std::size_t i = 0; i < vars.size(); ++i) out.emplace(vars[i], values[i]);
    return out;
}

struct HomogeneityReport {
    bool all_homogeneous = true;
    std::vector<std::optional<long>> degrees;  // weighted degree per equation
};

// Check each equation for weighted homogeneity under the set's weights.
inline HomogeneityReport check_w_homogeneity(const EquationSet& eqs) {
    HomogeneityReport rep;
    for (const auto& e : eqs.equations) {
        if (e.is_weighted_homogeneous(eqs.weights)) {
            rep.degrees.push_back(e.weighted_degree(eqs.weights));
        } else {
            rep.degrees.push_back(std::nullopt);
            rep.all_homogeneous = false;
        }
    }
    return rep;
}

// Exact monic series  x + prefix[0] x^{-2+1} ... ; prefix[i] is the
// coefficient of x^{-(i+1)}.
template <typename T>
LaurentSeries<T> series_from_prefix(const std::vector<T>& prefix) {
    LaurentSeries<T> C = LaurentSeries<T>::x_power(1);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        C.set_coeff(-static_cast<long>(i) - 1, prefix[i]);
    return C;
}

// Extend a coefficient prefix of a solution of the standard system to
// `order` coefficients: each new coefficient is forced by the next
// vanishing condition (Z^n)_{-m-j} = 0, which is linear in it with
// coefficient n.  A prefix at least m+n-2 long determines everything.
template <typename T>
std::vector<T> extend_solution(long n, long m, const std::vector<T>& prefix, long order) {
    detail::require_nondivisible(n, m);
    if (static_cast<long>(prefix.size()) < m + n - 2)
        throw DomainError("prefix shorter than m+n-2 does not determine the extension");
    if (order <= static_cast<long>(prefix.size()))
        return std::vector<T>(prefix.begin(), prefix.begin() + order);

    LaurentSeries<T> C = series_from_prefix(prefix);
    std::vector<T> out = prefix;
    const T inv_n = T(1) / T(n);
    for (long idx = static_cast<long>(prefix.size()) + 1; idx <= order; ++idx) {
        long e = n - idx - 1;  // the forcing condition reads (C^n)_e = 0
        T val = C.pow(n, e).coeff(e);
        T next = -(val * inv_n);
        C.set_coeff(-idx, next);
        out.push_back(next);
    }
    return out;
}

// Human-readable rendering, one equation per line.
inline std::string format_equations(const EquationSet& eqs, const std::string& label = "E") {
    std::string out;
    for (std::size_t i = 0; i < eqs.equations.size(); ++i)
        out += label + "_" + std::to_string(i + 1) + " = " + eqs.equations[i].str() + "\n";
    return out;
}

}  // namespace jacsys
