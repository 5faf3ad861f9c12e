#pragma once

// Numeric root extraction for exact univariate polynomials.
//
// The driver first computes Yun's squarefree decomposition exactly over
// the rationals, then runs Aberth-Ehrlich simultaneous iteration on each
// squarefree factor (whose roots are simple, so convergence is fast), and
// finally emits every root with its known multiplicity.  Starting points
// are seeded deterministically; identical inputs give identical output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace jacsys {

using Complex = std::complex<double>;

// Shortest faithful decimal form used for every printed double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(const Complex& z) {
    return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") +
           format_double(std::abs(z.imag())) + "i";
}

class ConvergenceError : public DomainError {
public:
    ConvergenceError(std::vector<Complex> partial, const std::string& what)
        : DomainError(what), partial_(std::move(partial)) {}
    const std::vector<Complex>& partial() const { return partial_; }

private:
    std::vector<Complex> partial_;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& coef, Complex z) {
    Complex acc = 0;
    for (std::size_t i = coef.size(); i-- > 0;) acc = acc * z + coef[i];
    return acc;
}

// Aberth-Ehrlich iteration on an arbitrary complex coefficient vector
// (ascending degree, nonzero leading coefficient).
inline std::vector<Complex> aberth(std::vector<Complex> coef, double tol, unsigned max_iter,
                                   std::uint64_t seed) {
    while (coef.size() > 1 && std::abs(coef.back()) == 0.0) coef.pop_back();
    const std::size_t deg = coef.size() - 1;
    std::vector<Complex> roots;
    if (deg == 0) return roots;
    // Normalize to a monic-scale problem for stable magnitudes.
    for (auto& c : coef) c /= coef.back();
    std::vector<Complex> dcoef(deg);
    for (std::size_t i = 1; i <= deg; ++i) dcoef[i - 1] = coef[i] * static_cast<double>(i);

    double radius = 0;
    for (std::size_t i = 0; i < deg; ++i) radius = std::max(radius, std::abs(coef[i]));
    radius = 1.0 + radius;
    // Deterministic jitter: breaks symmetric stalemates, fixed by the seed.
    const double jitter = 0.40 + 1e-3 * static_cast<double>(seed % 997);
    roots.resize(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        double r = radius * (0.5 + 0.5 * (static_cast<double>(k) + 1.0) / static_cast<double>(deg));
        double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(deg) + jitter;
        roots[k] = Complex(r * std::cos(a), r * std::sin(a));
    }

    for (unsigned iter = 0; iter < max_iter; ++iter) {
        double worst = 0;
        for (std::size_t k = 0; k < deg; ++k) {
            Complex fz = horner(coef, roots[k]);
            Complex dz = horner(dcoef, roots[k]);
            if (std::abs(dz) == 0.0) {  // nudge off a critical point
                roots[k] += Complex(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            Complex ratio = fz / dz;
            Complex sum = 0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sum += 1.0 / (roots[k] - roots[j]);
            Complex w = ratio / (1.0 - ratio * sum);
            roots[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(roots[k])));
        }
        if (worst < tol) break;
        if (iter + 1 == max_iter)
            throw ConvergenceError(roots, "root iteration did not converge within the cap");
    }
    // Newton polish.
    for (auto& z : roots)
        for (int i = 0; i < 3; ++i) {
            Complex dz = horner(dcoef, z);
            if (std::abs(dz) == 0.0) break;
            z -= horner(coef, z) / dz;
        }
    return roots;
}

inline bool root_order(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace detail

inline std::vector<Complex> to_complex_coeffs(const UniPoly<Rational>& f) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (long i = 0; i <= f.degree(); ++i) out.emplace_back(to_double(f.coeff(i)), 0.0);
    return out;
}

// All deg(f) complex roots with multiplicity, deterministically ordered.
inline std::vector<Complex> roots_numeric(const UniPoly<Rational>& f, double tol = 1e-12,
                                          unsigned max_iter = 1000, std::uint64_t seed = 0) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<Complex> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        auto rs = detail::aberth(to_complex_coeffs(factor), tol, max_iter, seed);
        std::sort(rs.begin(), rs.end(), detail::root_order);
        for (const auto& z : rs)
            for (int i = 0; i < mult; ++i) out.push_back(z);
    }
    std::stable_sort(out.begin(), out.end(), detail::root_order);
    return out;
}

// Roots of a polynomial that already has floating coefficients (used for
// numeric back-substitution); no multiplicity analysis.
inline std::vector<Complex> roots_numeric(const std::vector<Complex>& ascending_coeffs,
                                          double tol = 1e-12, unsigned max_iter = 1000,
                                          std::uint64_t seed = 0) {
    auto rs = detail::aberth(ascending_coeffs, tol, max_iter, seed);
    std::sort(rs.begin(), rs.end(), detail::root_order);
    return rs;
}

}  // namespace jacsys
