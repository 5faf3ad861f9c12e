#pragma once

// Dense univariate polynomials over a generic coefficient ring, plus the
// classical algorithms the solvers need: division, gcd, Yun squarefree
// decomposition, composition/shift, and Sylvester resultants.
//
// Coefficient ring requirements: constructible from long (canonical image),
// ==, +, -, *, and / where division is meaningful (fields, or exact
// division in a domain).  Coefficients are stored low-degree-first and the
// representation is always trimmed (no zero leading coefficient).

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace jacsys {

template <typename R>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long constant) { coef_.push_back(R(constant)); trim(); }  // NOLINT (implicit)
    UniPoly(const R& constant) { coef_.push_back(constant); trim(); }  // NOLINT (implicit)
    explicit UniPoly(std::vector<R> ascending) : coef_(std::move(ascending)) { trim(); }

    static UniPoly x() { return monomial(1, R(1)); }

    static UniPoly monomial(std::size_t degree, const R& c) {
        UniPoly p;
        if (!(c == R(0))) {
            p.coef_.assign(degree + 1, R(0));
            p.coef_[degree] = c;
        }
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coef_.size()) - 1; }

    const R& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return coef_.back();
    }

    R coeff(long degree) const {
        if (degree < 0 || degree >= static_cast<long>(coef_.size())) return R(0);
        return coef_[static_cast<std::size_t>(degree)];
    }

    void set_coeff(long degree, const R& c) {
        if (degree < 0) throw DomainError("negative degree coefficient");
        if (static_cast<std::size_t>(degree) >= coef_.size()) coef_.resize(degree + 1, R(0));
        coef_[static_cast<std::size_t>(degree)] = c;
        trim();
    }

    const std::vector<R>& coeffs() const { return coef_; }

    bool operator==(const UniPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), R(0));
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] = coef_[i] + o.coef_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), R(0));
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] = coef_[i] - o.coef_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<R> out(a.coef_.size() + b.coef_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                out[i + j] = out[i + j] + a.coef_[i] * b.coef_[j];
        }
        UniPoly p;
        p.coef_ = std::move(out);
        p.trim();
        return p;
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly operator*(const R& s) const {
        UniPoly r = *this;
        for (auto& c : r.coef_) c = c * s;
        r.trim();
        return r;
    }

    // Scalar division (every coefficient divided by s).
    UniPoly operator/(const R& s) const {
        UniPoly r = *this;
        for (auto& c : r.coef_) c = c / s;
        r.trim();
        return r;
    }

    UniPoly derivative() const {
        UniPoly d;
        if (coef_.size() <= 1) return d;
        d.coef_.resize(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i) d.coef_[i - 1] = coef_[i] * R(static_cast<long>(i));
        d.trim();
        return d;
    }

    UniPoly pow(long e) const {
        if (e < 0) throw DomainError("negative polynomial power");
        UniPoly acc(1), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * b;
            if (k > 1) b = b * b;
        }
        return acc;
    }

    template <typename T>
    T eval(const T& at) const {
        T acc(0);
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * at + T(coef_[i]);
        return acc;
    }

    // Evaluation into a foreign scalar type via an explicit coercion.
    template <typename T, typename Cast>
    T eval(const T& at, Cast cast) const {
        T acc = cast(R(0));
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * at + cast(coef_[i]);
        return acc;
    }

    // p(q(x)) by Horner.
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * inner + UniPoly(coef_[i]);
        return acc;
    }

    UniPoly shifted(const R& b) const {  // p(x + b)
        UniPoly lin;
        lin.coef_ = {b, R(1)};
        return compose(lin);
    }

    UniPoly scaled_arg(const R& a) const {  // p(a * x)
        UniPoly r = *this;
        R f(1);
        for (std::size_t i = 1; i < r.coef_.size(); ++i) {
            f = f * a;
            r.coef_[i] = r.coef_[i] * f;
        }
        r.trim();
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coef_.size(); i-- > 0;) {
            if (coef_[i] == R(0)) continue;
            std::string cs = scalar_str(coef_[i]);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            bool unit = (cs == "1");
            if (i == 0) out += cs;
            else {
                if (!unit) out += cs + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    static std::string scalar_str(const Rational& c) { return to_string(c); }
    template <typename S>
    static std::string scalar_str(const S& c) {
        using jacsys::to_string;
        return to_string(c);
    }

    void trim() {
        while (!coef_.empty() && coef_.back() == R(0)) coef_.pop_back();
    }

    std::vector<R> coef_;
};

template <typename R>
UniPoly<R> operator*(const R& s, const UniPoly<R>& p) { return p * s; }

// Quotient and remainder; requires the divisor's leading coefficient to be
// invertible (always true over a field).  Division by a *monic* divisor
// never inverts anything, so it is safe in any coefficient ring.
template <typename R>
std::pair<UniPoly<R>, UniPoly<R>> divrem(const UniPoly<R>& num, const UniPoly<R>& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    UniPoly<R> q, r = num;
    const long dd = den.degree();
    const bool monic = den.leading() == R(1);
    while (!r.is_zero() && r.degree() >= dd) {
        R c = monic ? r.leading() : r.leading() / den.leading();
        long shift = r.degree() - dd;
        UniPoly<R> t = UniPoly<R>::monomial(static_cast<std::size_t>(shift), c);
        q += t;
        r -= t * den;
    }
    return {q, r};
}

template <typename R>
UniPoly<R> operator/(const UniPoly<R>& num, const UniPoly<R>& den) {
    return divrem(num, den).first;
}

// Exact division; raises if the remainder is nonzero.
template <typename R>
UniPoly<R> div_exact(const UniPoly<R>& num, const UniPoly<R>& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

template <typename R>
UniPoly<R> rem(const UniPoly<R>& num, const UniPoly<R>& den) {
    return divrem(num, den).second;
}

template <typename R>
UniPoly<R> make_monic(const UniPoly<R>& p) {
    if (p.is_zero()) return p;
    return p / p.leading();
}

// Monic gcd by the Euclidean algorithm (field coefficients).
template <typename R>
UniPoly<R> poly_gcd(UniPoly<R> a, UniPoly<R> b) {
    while (!b.is_zero()) {
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Extended Euclid: returns (g, s, t) monic with s*a + t*b = g.
template <typename R>
std::array<UniPoly<R>, 3> poly_ext_gcd(const UniPoly<R>& a, const UniPoly<R>& b) {
    UniPoly<R> r0 = a, r1 = b, s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::move(r1); r1 = std::move(r2);
        UniPoly<R> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R lead = r0.leading();
    return {r0 / lead, s0 / lead, t0 / lead};
}

template <typename R>
UniPoly<R> squarefree_part(const UniPoly<R>& f) {
    if (f.degree() <= 0) return make_monic(f);
    auto g = poly_gcd(f, f.derivative());
    return make_monic(div_exact(f, g));
}

// Yun's squarefree decomposition: f = lc * prod h_i^i with h_i squarefree,
// pairwise coprime and monic.  Returns pairs (h_i, i) with deg h_i > 0.
template <typename R>
std::vector<std::pair<UniPoly<R>, int>> squarefree_decomposition(const UniPoly<R>& f) {
    std::vector<std::pair<UniPoly<R>, int>> out;
    if (f.degree() <= 0) return out;
    UniPoly<R> fm = make_monic(f);
    UniPoly<R> d = fm.derivative();
    UniPoly<R> g = poly_gcd(fm, d);
    UniPoly<R> w = div_exact(fm, g);
    UniPoly<R> y = div_exact(d, g);
    UniPoly<R> z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<R> h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = div_exact(w, h);
        y = div_exact(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// Fraction-free determinant (Bareiss).  Exact in any integral domain whose
// operator/ performs exact division; pivoting only swaps rows, so the
// divisions are guaranteed exact by the Bareiss identity.
template <typename R>
R det_bareiss(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    if (n == 0) return R(1);
    R prev(1);
    long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == R(0)) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == R(0)) ++p;
            if (p == n) return R(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Resultant of f and g via the Sylvester matrix.  Conventions:
//   deg f = 0 and deg g = 0 -> error (nothing to eliminate there either);
//   deg f = 0               -> f^{deg g}; symmetrically for g.
template <typename R>
R sylvester_resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
    if (f.is_zero() || g.is_zero()) return R(0);
    const long df = f.degree(), dg = g.degree();
    if (df == 0 && dg == 0) throw DomainError("resultant of two constants");
    if (df == 0) {
        R acc(1);
        for (long i = 0; i < dg; ++i) acc = acc * f.coeff(0);
        return acc;
    }
    if (dg == 0) {
        R acc(1);
        for (long i = 0; i < df; ++i) acc = acc * g.coeff(0);
        return acc;
    }
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<R>> m(n, std::vector<R>(n, R(0)));
    for (long r = 0; r < dg; ++r)
        for (long c = 0; c <= df; ++c) m[r][r + c] = f.coeff(df - c);
    for (long r = 0; r < df; ++r)
        for (long c = 0; c <= dg; ++c) m[dg + r][r + c] = g.coeff(dg - c);
    return det_bareiss(std::move(m));
}

}  // namespace jacsys
