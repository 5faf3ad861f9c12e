#pragma once

// Jacobian matrices of the equation systems with respect to the series
// unknowns.
//
// For the standard system the matrix has a closed form built from two
// series: with Z the symbolic monic series and
//     G = sum_i lambda_i (m-i) Z^{m-i-1},
// the entry in row i, column j (both 1-based, column j differentiates by
// Z_{-j}) is
//     n * (Z^{n-1})_{j-i}   for i = 1..m-1      (and 0 once j >= n+i),
//     G_{m+j-i-1}           for i = m..m+n-2    (and 0 once j > i).
// Both follow from the coefficient derivative rule
//     d (Z^p)_k / d Z_l = p * (Z^{p-1})_{k-l}.
//
// jacobian_direct differentiates the stored equations term by term and
// works for every system kind; the formula and the direct matrix agree on
// standard systems (this is exercised by the test suite).

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "multipoly.hpp"
#include "systems.hpp"

namespace jacsys {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// d (Z^p)_k / d Z_l for the monic series with unknowns Z_{-1}..Z_{-depth}:
// the coefficient derivative rule, exposed for direct use and testing.
inline MultiPoly coeff_partial(long p, long k, long l, long depth) {
    std::vector<VarId> vars;
    LaurentSeries<MultiPoly> Z = detail::symbolic_series(1, depth, &vars);
    long want = k - l;
    auto Zp = Z.pow(p - 1, want);
    if (want < Zp.cutoff())
        throw TruncationError("derivative index below the series truncation");
    return Zp.coeff(want) * Rational(p);
}

// Closed-form Jacobian of the standard system for (n, m, lambdas).
inline Matrix<MultiPoly> jacobian_formula(long n, long m,
                                          std::vector<Rational> lambdas = {}) {
    detail::require_nondivisible(n, m);
    detail::require_within_cap(m + n);
    lambdas = detail::normalized_lambdas(n, m, std::move(lambdas));

    const long size = m + n - 2;
    LaurentSeries<MultiPoly> Z = detail::symbolic_series(1, size, nullptr);
    auto Zn1 = Z.pow(n - 1, 2 - m);
    LaurentSeries<MultiPoly> G(2 - n);
    for (std::size_t t = 0; t < lambdas.size(); ++t) {
        long w = m - static_cast<long>(t);
        if (lambdas[t] == 0 || w == 0) continue;
        G += Z.pow(w - 1, 2 - n) * MultiPoly(lambdas[t] * w);
    }

    Matrix<MultiPoly> J(static_cast<std::size_t>(size));
    for (long i = 1; i <= m - 1; ++i) {
        auto& row = J[static_cast<std::size_t>(i - 1)];
        for (long j = 1; j <= size; ++j)
            row.push_back(j < n + i ? Zn1.coeff(j - i) * Rational(n) : MultiPoly());
    }
    for (long i = m; i <= size; ++i) {
        auto& row = J[static_cast<std::size_t>(i - 1)];
        for (long j = 1; j <= size; ++j)
            row.push_back(j <= i ? G.coeff(m + j - i - 1) : MultiPoly());
    }
    return J;
}

// Jacobian by direct differentiation of the stored equations; columns run
// over the Z-kind variables in the set's order.  Works for every builder.
inline Matrix<MultiPoly> jacobian_direct(const EquationSet& eqs) {
    std::vector<VarId> zvars;
    for (VarId v : eqs.variables)
        if (v.kind == VarId::Z) zvars.push_back(v);
    Matrix<MultiPoly> J;
    J.reserve(eqs.equations.size());
    for (const auto& e : eqs.equations) {
        std::vector<MultiPoly> row;
        row.reserve(zvars.size());
        for (VarId v : zvars) row.push_back(e.derivative(v));
        J.push_back(std::move(row));
    }
    return J;
}

template <typename T>
Matrix<T> eval_matrix(const Matrix<MultiPoly>& mat, const std::map<VarId, T>& point) {
    Matrix<T> out;
    out.reserve(mat.size());
    for (const auto& row : mat) {
        std::vector<T> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(e.template eval<T>(point));
        out.push_back(std::move(r));
    }
    return out;
}

template <typename T, typename Cast>
Matrix<T> eval_matrix(const Matrix<MultiPoly>& mat, const std::map<VarId, T>& point,
                      Cast cast) {
    Matrix<T> out;
    out.reserve(mat.size());
    for (const auto& row : mat) {
        std::vector<T> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(e.eval(point, cast));
        out.push_back(std::move(r));
    }
    return out;
}

// Determinant over an exact ring: fraction-free elimination (see
// det_bareiss).  For floating point use det_lu below instead.
template <typename R>
R det_exact(const Matrix<R>& mat) {
    return det_bareiss(mat);
}

// LU with partial pivoting for complex matrices.
inline std::complex<double> det_lu(Matrix<std::complex<double>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    std::complex<double> det(1.0, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        double best = std::abs(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            double v = std::abs(a[r][c]);
            if (v > best) { best = v; p = r; }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (p != c) { std::swap(a[p], a[c]); det = -det; }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            std::complex<double> f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace jacsys
