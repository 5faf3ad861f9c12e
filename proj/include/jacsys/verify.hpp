#pragma once

// Verification layer: two-variable (Laurent) polynomials, the Poisson-style
// bracket, homogeneous lifts of univariate polynomials, and the checkable
// characterizations of a candidate pair (p, q):
//
//   normal form     p, q monic of degrees n, m with the sub-leading slots
//                   x^{n-1}, x^{m-1} absent
//   constant bracket  W = m p' q - n p q' is a nonzero constant lt
//   bracket lift    [P, Q] = lt * y^{m+n-2} for the homogeneous lifts
//   power difference  p^m - q^n = n * lt/(n(1-m-n)) * x^{mn-m-n+1} + lower
//   divisibility    g = p q is separable, p | (m g' - lt), q | (n g' + lt)
//
// plus the degree-bound audit for the datum coefficients of a solution
// family and a polynomial-within-cutoff check for series powers.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "systems.hpp"
#include "unipoly.hpp"

namespace jacsys {

// Polynomial in two variables with integer exponents of either sign.
template <typename R>
class BiPoly {
public:
    using Key = std::pair<long, long>;  // (x-exponent, y-exponent)

    BiPoly() = default;
    BiPoly(long v) : BiPoly(R(v)) {}
    explicit BiPoly(const R& v) {
        if (!(v == R(0))) c_.emplace(Key{0, 0}, v);
    }

    static BiPoly monomial(long ex, long ey, const R& c) {
        BiPoly out;
        out.set_coeff(ex, ey, c);
        return out;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, R>& terms() const { return c_; }

    R coeff(long ex, long ey) const {
        auto it = c_.find(Key{ex, ey});
        return it == c_.end() ? R(0) : it->second;
    }

    void set_coeff(long ex, long ey, const R& v) {
        if (v == R(0)) c_.erase(Key{ex, ey});
        else c_[Key{ex, ey}] = v;
    }

    bool operator==(const BiPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const {
        BiPoly out = *this;
        for (auto& [k, v] : out.c_) v = -v;
        return out;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly out = a;
        for (auto& [k, v] : b.c_) out.accumulate(k, v);
        return out;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (auto& [ka, va] : a.c_)
            for (auto& [kb, vb] : b.c_)
                out.accumulate(Key{ka.first + kb.first, ka.second + kb.second}, va * vb);
        return out;
    }

    BiPoly operator*(const R& s) const {
        BiPoly out;
        for (auto& [k, v] : c_) out.accumulate(k, v * s);
        return out;
    }

    BiPoly dx() const {
        BiPoly out;
        for (auto& [k, v] : c_) {
            if (k.first == 0) continue;
            out.accumulate(Key{k.first - 1, k.second}, v * R(k.first));
        }
        return out;
    }

    BiPoly dy() const {
        BiPoly out;
        for (auto& [k, v] : c_) {
            if (k.second == 0) continue;
            out.accumulate(Key{k.first, k.second - 1}, v * R(k.second));
        }
        return out;
    }

    // Substitute y = 1.
    UniPoly<R> at_y1() const {
        UniPoly<R> out;
        for (auto& [k, v] : c_) {
            if (k.first < 0) throw DomainError("negative x-exponent in a polynomial specialization");
            out.set_coeff(k.first, out.coeff(k.first) + v);
        }
        return out;
    }

    std::string str(const std::string& xn = "x", const std::string& yn = "y") const {
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            using jacsys::to_string;
            std::string mono;
            if (it->first.first != 0) mono += xn + "^" + std::to_string(it->first.first);
            if (it->first.second != 0) {
                if (!mono.empty()) mono += "*";
                mono += yn + "^" + std::to_string(it->first.second);
            }
            std::string cs = to_string(it->second);
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else if (cs == "-1") out += "-" + mono;
            else out += "(" + cs + ")*" + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    void accumulate(const Key& k, const R& v) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (!(v == R(0))) c_.emplace(k, v);
        } else {
            it->second = it->second + v;
            if (it->second == R(0)) c_.erase(it);
        }
    }

    std::map<Key, R> c_;
};

template <typename R>
BiPoly<R> bracket(const BiPoly<R>& a, const BiPoly<R>& b) {
    return a.dx() * b.dy() - a.dy() * b.dx();
}

// Homogenize a univariate polynomial to total degree d: x^i -> x^i y^{d-i}.
template <typename R>
BiPoly<R> lift_homogeneous(const UniPoly<R>& f, long d) {
    if (f.degree() > d) throw DomainError("lift degree below the polynomial degree");
    BiPoly<R> out;
    for (long i = 0; i <= f.degree(); ++i) {
        R c = f.coeff(i);
        if (!(c == R(0))) out.set_coeff(i, d - i, c);
    }
    return out;
}

template <typename R>
BiPoly<R> from_unipoly_x(const UniPoly<R>& f) {
    BiPoly<R> out;
    for (long i = 0; i <= f.degree(); ++i) {
        R c = f.coeff(i);
        if (!(c == R(0))) out.set_coeff(i, 0, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conditions on a candidate pair.

template <typename T>
struct ConditionReport {
    bool wronskian_constant = false;   // W = m p' q - n p q' constant, nonzero
    bool bracket_homogeneous = false;  // [P, Q] = W y^{m+n-2} for the lifts
    bool power_difference = false;     // p^m - q^n has the forced leading term
    bool divisibility = false;         // separability + the two congruences
    T lambda_tilde{};                  // the constant W (0 if non-constant)
    T lambda_tail{};                   // W / (n (1-m-n))
    bool all() const {
        return wronskian_constant && bracket_homogeneous && power_difference && divisibility;
    }
};

// Evaluate the four equivalent-pair conditions for monic p, q of degrees
// n, m.  Requires an exact coefficient field (gcd computations).
template <typename T>
ConditionReport<T> check_conditions(long n, long m, const UniPoly<T>& p, const UniPoly<T>& q) {
    detail::require_nondivisible(n, m);
    if (p.degree() != n || q.degree() != m)
        throw DomainError("pair degrees do not match (n, m)");
    if (!(p.leading() == T(1)) || !(q.leading() == T(1)))
        throw DomainError("pair must be monic");

    ConditionReport<T> rep;
    UniPoly<T> W = p.derivative() * q * T(m) - p * q.derivative() * T(n);
    rep.wronskian_constant = W.degree() <= 0 && !(W == UniPoly<T>());
    rep.lambda_tilde = W.coeff(0);
    if (W.degree() > 0) rep.lambda_tilde = T(0);
    rep.lambda_tail = rep.lambda_tilde * T(make_rational(1, n * (1 - m - n)));

    auto B = bracket(lift_homogeneous(p, n), lift_homogeneous(q, m));
    rep.bracket_homogeneous =
        !(rep.lambda_tilde == T(0)) &&
        B == BiPoly<T>::monomial(0, m + n - 2, rep.lambda_tilde);

    UniPoly<T> d = p.pow(m) - q.pow(n);
    rep.power_difference =
        d.degree() == m * n - m - n + 1 && d.leading() == rep.lambda_tail * T(n);

    UniPoly<T> g = p * q;
    UniPoly<T> gp = g.derivative();
    bool separable = poly_gcd(g, gp).degree() == 0;
    UniPoly<T> lt(rep.lambda_tilde);
    bool div_p = rem(gp * T(m) - lt, p) == UniPoly<T>();
    bool div_q = rem(gp * T(n) + lt, q) == UniPoly<T>();
    rep.divisibility = separable && div_p && div_q;
    return rep;
}

template <typename T>
struct PairVerdict {
    bool accepted = false;
    bool normal_form = false;
    ConditionReport<T> conditions;
    std::vector<std::string> reasons;  // human-readable failure notes
};

// Full audit of a candidate pair: structural normal form plus the four
// conditions.  `accepted` means every check passed.
template <typename T>
PairVerdict<T> verify_pair(long n, long m, const UniPoly<T>& p, const UniPoly<T>& q) {
    PairVerdict<T> v;
    if (p.degree() != n || q.degree() != m) {
        v.reasons.push_back("degrees are (" + std::to_string(p.degree()) + ", " +
                            std::to_string(q.degree()) + "), expected (" +
                            std::to_string(n) + ", " + std::to_string(m) + ")");
        return v;
    }
    if (!(p.leading() == T(1)) || !(q.leading() == T(1))) {
        v.reasons.push_back("pair is not monic");
        return v;
    }
    v.normal_form = p.coeff(n - 1) == T(0) && q.coeff(m - 1) == T(0);
    if (!v.normal_form)
        v.reasons.push_back("sub-leading coefficient present; shift x to remove it");

    v.conditions = check_conditions(n, m, p, q);
    if (!v.conditions.wronskian_constant)
        v.reasons.push_back("m p' q - n p q' is not a nonzero constant");
    if (!v.conditions.bracket_homogeneous)
        v.reasons.push_back("bracket of the homogeneous lifts is not a constant multiple of y^" +
                            std::to_string(m + n - 2));
    if (!v.conditions.power_difference)
        v.reasons.push_back("p^m - q^n does not have the forced leading term at degree " +
                            std::to_string(m * n - m - n + 1));
    if (!v.conditions.divisibility)
        v.reasons.push_back("separability/divisibility conditions on g = p q fail");
    v.accepted = v.normal_form && v.conditions.all();
    return v;
}

// ---------------------------------------------------------------------------
// Series-level checks.

struct PowerPolyReport {
    bool is_polynomial = false;
    // Depth down to which the principal part was verified to vanish;
    // nullopt when the series is exact (complete check).
    std::optional<long> checked_to;
};

template <typename R>
PowerPolyReport polynomial_within_cutoff(const LaurentSeries<R>& f) {
    PowerPolyReport rep;
    rep.is_polynomial = true;
    for (const auto& [d, v] : f.known_terms())
        if (d < 0 && !(v == R(0))) rep.is_polynomial = false;
    if (!f.is_exact()) rep.checked_to = f.cutoff();
    return rep;
}

// ---------------------------------------------------------------------------
// Degree bounds for the datum coefficients of a solution family.
//
// For a solution of the homogeneous system with coefficient prefix
// c_{-1}..c_{-(m+n-2)} (rational numbers; the graded solution is
// Z_{-k} = c_{-k} Y^{k+1}), the coefficients F_{-k} = (Z^m)_{-k} for
// k >= n-1 are polynomials in Y.  Their Y-degrees obey
//     deg_Y F_{-k} <= (2 - n + k) + (deg_Y(datum) - 1),
// the bound being k + m when the datum is Y^{m+n-1}.

struct DatumDegreeReport {
    long first_k = 0;                 // = n-1
    std::vector<long> degrees;        // deg_Y F_{-k}, k = first_k..upto
    std::vector<long> bounds;         // the datum-adjusted bound per k
    bool within = true;
};

inline DatumDegreeReport datum_degree_bounds(long n, long m,
                                             const std::vector<Rational>& coeff_prefix,
                                             long upto, long datum_y_degree = -1) {
    detail::require_nondivisible(n, m);
    if (datum_y_degree < 0) datum_y_degree = m + n - 1;
    if (upto < n - 1) throw DomainError("datum degree window starts at k = n-1");

    // Graded coefficients c_{-k} Y^{k+1}, extended far enough that (Z^m)
    // is known down to x^{-upto}.
    std::vector<MultiPoly> graded;
    graded.reserve(coeff_prefix.size());
    for (std::size_t i = 0; i < coeff_prefix.size(); ++i) {
        Monomial ypow = Monomial::var(VarId::y(), static_cast<int>(i) + 2);
        graded.push_back(MultiPoly::term(ypow, coeff_prefix[i]));
    }
    long depth = std::max(upto + m - 1, m + n - 2);
    graded = extend_solution(n, m, graded, depth);

    LaurentSeries<MultiPoly> Z = series_from_prefix(graded).truncated(-depth);
    auto Zm = Z.pow(m, -upto);

    DatumDegreeReport rep;
    rep.first_k = n - 1;
    for (long k = n - 1; k <= upto; ++k) {
        MultiPoly f = Zm.coeff(-k);
        long deg = f.is_zero() ? 0 : f.max_degree_in(VarId::y());
        long bound = (2 - n + k) + (datum_y_degree - 1);
        rep.degrees.push_back(deg);
        rep.bounds.push_back(bound);
        if (deg > bound) rep.within = false;
    }
    return rep;
}

}  // namespace jacsys
