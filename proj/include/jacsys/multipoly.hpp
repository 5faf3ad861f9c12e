#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// The variable universe is fixed by the problem domain: series unknowns
// Z_k (k <= 1), the grading variable Y, the formal tail scalar (prints as
// the lambda sign), the formal datum F of the standard system, and the
// auxiliary unknowns p_i used by the reduced one-variable systems.
//
// Terms are kept in a map ordered by graded lexicographic comparison on
// the precedence sequence Z_1, Z_0, Z_{-1}, Z_{-2}, ..., Y, lambda, F,
// p_0, p_1, ...; iteration yields the leading term first.  Pretty-printing
// uses a different, display-oriented order (see display_str).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace jacsys {

struct VarId {
    enum Kind : int { Z = 0, Y = 1, Lambda = 2, Datum = 3, Aux = 4 };

    int kind = Z;
    int index = 0;  // Z: exponent-slot k <= 1;  Aux: i >= 0;  others: unused

    static VarId z(int k) {
        if (k > 1) throw DomainError("series variable index above the leading slot");
        return {Z, k};
    }
    static VarId y() { return {Y, 0}; }
    static VarId lambda() { return {Lambda, 0}; }
    static VarId datum() { return {Datum, 0}; }
    static VarId aux(int i) {
        if (i < 0) throw DomainError("negative auxiliary variable index");
        return {Aux, i};
    }

    // Precedence rank; lexicographically smaller rank = earlier variable.
    std::pair<int, long> rank() const {
        if (kind == Z) return {0, 1L - index};
        return {kind, index};
    }

    bool operator==(const VarId& o) const { return kind == o.kind && index == o.index; }
    bool operator!=(const VarId& o) const { return !(*this == o); }
    bool operator<(const VarId& o) const { return rank() < o.rank(); }

    std::string name() const {
        switch (kind) {
            case Z:
                if (index < 0) return "Z_{" + std::to_string(index) + "}";
                return "Z_" + std::to_string(index);
            case Y: return "Y";
            case Lambda: return "λ";
            case Datum: return "F";
            default: return "p" + std::to_string(index);
        }
    }
};

// Product of variables with positive exponents, sorted by precedence.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors) : f_(std::move(factors)) {
        normalize();
    }

    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, int e = 1) { return Monomial({{v, e}}); }

    bool is_one() const { return f_.empty(); }
    const std::vector<std::pair<VarId, int>>& factors() const { return f_; }

    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : f_) d += e;
        return d;
    }

    int exponent(VarId v) const {
        for (auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<std::pair<VarId, int>> out = f_;
        out.insert(out.end(), o.f_.begin(), o.f_.end());
        return Monomial(std::move(out));
    }

    // Divides exactly or returns nullopt.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        std::vector<std::pair<VarId, int>> out;
        auto it = f_.begin();
        for (auto& [v, e] : o.f_) {
            while (it != f_.end() && it->first < v) out.push_back(*it++);
            if (it == f_.end() || !(it->first == v) || it->second < e) return std::nullopt;
            if (it->second > e) out.emplace_back(v, it->second - e);
            ++it;
        }
        out.insert(out.end(), it, f_.end());
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    Monomial without(VarId v) const {
        std::vector<std::pair<VarId, int>> out;
        for (auto& p : f_)
            if (p.first != v) out.push_back(p);
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    // Graded lexicographic comparison, +1 if *this is the larger monomial.
    int cmp(const Monomial& o) const {
        int da = total_degree(), db = o.total_degree();
        if (da != db) return da < db ? -1 : 1;
        auto a = f_.begin(), b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first == b->first) {
                if (a->second != b->second) return a->second < b->second ? -1 : 1;
                ++a; ++b;
            } else if (a->first < b->first) {
                return 1;  // a has positive exponent on an earlier variable
            } else {
                return -1;
            }
        }
        if (a != f_.end()) return 1;
        if (b != o.f_.end()) return -1;
        return 0;
    }

private:
    void normalize() {
        std::sort(f_.begin(), f_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<VarId, int>> out;
        for (auto& [v, e] : f_) {
            if (e < 0) throw DomainError("negative exponent in monomial");
            if (e == 0) continue;
            if (!out.empty() && out.back().first == v) out.back().second += e;
            else out.emplace_back(v, e);
        }
        f_ = std::move(out);
    }

    std::vector<std::pair<VarId, int>> f_;
};

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.cmp(b) > 0; }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term(Monomial::one(), Rational(c)); }  // NOLINT (implicit)
    MultiPoly(const Rational& c) { add_term(Monomial::one(), c); }  // NOLINT (implicit)

    static MultiPoly variable(VarId v) { return term(Monomial::var(v), 1); }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    Rational constant_value() const {
        if (is_zero()) return 0;
        if (!is_constant()) throw DomainError("polynomial is not a constant");
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::set<VarId> vars() const {
        std::set<VarId> out;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors()) out.insert(v);
        return out;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly operator*(const Rational& s) const {
        if (s == 0) return MultiPoly();
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = c * s;
        return r;
    }

    // Division: by a constant it is coefficient-wise; otherwise exact
    // multivariate long division (raises on a nonzero remainder).  The
    // fraction-free elimination code relies on the exact branch.
    MultiPoly operator/(const MultiPoly& d) const {
        if (d.is_zero()) throw DomainError("division by zero polynomial");
        if (d.is_constant()) {
            Rational s = d.constant_value();
            MultiPoly r = *this;
            for (auto& [m, c] : r.terms_) c = c / s;
            return r;
        }
        MultiPoly q, r = *this;
        const auto& [dm, dc] = *d.terms_.begin();
        while (!r.is_zero()) {
            const auto& [rm, rc] = *r.terms_.begin();
            auto m = rm.divided_by(dm);
            if (!m) throw DomainError("inexact polynomial division");
            MultiPoly t = term(*m, rc / dc);
            q += t;
            r -= t * d;
        }
        return q;
    }

    MultiPoly pow(long e) const {
        if (e < 0) throw DomainError("negative power of a polynomial");
        MultiPoly acc(1), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * b;
            if (k > 1) b = b * b;
        }
        return acc;
    }

    MultiPoly derivative(VarId v) const {
        MultiPoly out;
        for (auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            Monomial base = m.without(v);
            if (e > 1) base = base * Monomial::var(v, e - 1);
            out.add_term(base, c * e);
        }
        return out;
    }

    // Substitute polynomials for a subset of variables.
    MultiPoly subs(const std::map<VarId, MultiPoly>& bind) const {
        MultiPoly out;
        for (auto& [m, c] : terms_) {
            MultiPoly t{c};
            for (auto& [v, e] : m.factors()) {
                auto it = bind.find(v);
                if (it == bind.end()) t *= term(Monomial::var(v, e), 1);
                else t *= it->second.pow(e);
            }
            out += t;
        }
        return out;
    }

    // Full evaluation into a scalar type T; every occurring variable must
    // be bound.  `cast` injects rational coefficients into T.
    template <typename T, typename Cast>
    T eval(const std::map<VarId, T>& point, Cast cast) const {
        T acc = cast(Rational(0));
        for (auto& [m, c] : terms_) {
            T t = cast(c);
            for (auto& [v, e] : m.factors()) {
                auto it = point.find(v);
                if (it == point.end())
                    throw DomainError("evaluation point missing variable " + v.name());
                for (int i = 0; i < e; ++i) t = t * it->second;
            }
            acc = acc + t;
        }
        return acc;
    }

    template <typename T>
    T eval(const std::map<VarId, T>& point) const {
        return eval(point, [](const Rational& c) { return T(c); });
    }

    // Weighted degree under the given weights (variables absent from the
    // map weigh zero); nullopt for the zero polynomial.
    std::optional<long> weighted_degree(const std::map<VarId, long>& w) const {
        std::optional<long> best;
        for (auto& [m, c] : terms_) {
            long d = 0;
            for (auto& [v, e] : m.factors()) {
                auto it = w.find(v);
                if (it != w.end()) d += it->second * e;
            }
            if (!best || d > *best) best = d;
        }
        return best;
    }

    // True when every term has the same weighted degree (zero counts as
    // homogeneous of any degree).
    bool is_weighted_homogeneous(const std::map<VarId, long>& w) const {
        std::optional<long> seen;
        for (auto& [m, c] : terms_) {
            long d = 0;
            for (auto& [v, e] : m.factors()) {
                auto it = w.find(v);
                if (it != w.end()) d += it->second * e;
            }
            if (seen && *seen != d) return false;
            seen = d;
        }
        return true;
    }

    long max_degree_in(VarId v) const {
        long d = 0;
        for (auto& [m, c] : terms_) d = std::max<long>(d, m.exponent(v));
        return d;
    }

    // View as a univariate polynomial in `v` with MultiPoly coefficients.
    UniPoly<MultiPoly> as_unipoly_in(VarId v) const {
        std::vector<MultiPoly> coeffs(static_cast<std::size_t>(max_degree_in(v)) + 1);
        for (auto& [m, c] : terms_) {
            int e = m.exponent(v);
            coeffs[static_cast<std::size_t>(e)] += term(m.without(v), c);
        }
        return UniPoly<MultiPoly>(std::move(coeffs));
    }

    // Display string following the house convention: tail-scalar terms
    // first, then terms with series variables ordered by their sorted
    // index lists (higher indices first), then Y-only/constant terms, and
    // the formal datum last.
    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::pair<const Monomial*, const Rational*>> ts;
        for (auto& [m, c] : terms_) ts.emplace_back(&m, &c);
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            auto ka = display_key(*a.first), kb = display_key(*b.first);
            return ka < kb;
        });
        std::string out;
        for (auto& [m, c] : ts) {
            bool neg = *c < 0;
            Rational mag = neg ? -*c : *c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string factors;
            for (auto& [v, e] : ordered_factors(*m)) {
                if (!factors.empty()) factors += " ";
                factors += v.name();
                if (e > 1) factors += "^" + std::to_string(e);
            }
            if (factors.empty()) out += to_string(mag);
            else if (mag == 1) out += factors;
            else out += to_string(mag) + " " + factors;
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Sort key for display: group, then ascending list of series indices
    // compared entrywise with higher (less negative) indices first.
    static std::pair<int, std::vector<int>> display_key(const Monomial& m) {
        bool has_lambda = m.exponent(VarId::lambda()) > 0;
        bool has_datum = m.exponent(VarId::datum()) > 0;
        std::vector<int> idx;
        for (auto& [v, e] : m.factors())
            if (v.kind == VarId::Z)
                for (int i = 0; i < e; ++i) idx.push_back(v.index);
        std::sort(idx.begin(), idx.end());
        for (auto& i : idx) i = -i;  // compare higher index first
        int group = has_lambda ? 0 : (!idx.empty() ? 1 : (has_datum ? 3 : 2));
        return {group, std::move(idx)};
    }

    // Factor order inside a printed term: lambda, then Z by descending
    // index, then Y, datum, auxiliaries.
    static std::vector<std::pair<VarId, int>> ordered_factors(const Monomial& m) {
        std::vector<std::pair<VarId, int>> fs = m.factors();
        std::stable_sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
            auto key = [](const VarId& v) -> std::pair<int, long> {
                if (v.kind == VarId::Lambda) return {0, 0};
                if (v.kind == VarId::Z) return {1, -v.index};
                if (v.kind == VarId::Y) return {2, 0};
                if (v.kind == VarId::Datum) return {3, 0};
                return {4, v.index};
            };
            return key(a.first) < key(b.first);
        });
        return fs;
    }

    TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

inline std::string to_string(const MultiPoly& p) { return p.str(); }

// Resultant of f and g viewed as univariate polynomials in `eliminated`,
// with MultiPoly coefficients (Sylvester determinant, fraction-free).
inline MultiPoly uni_resultant(const MultiPoly& f, const MultiPoly& g, VarId eliminated) {
    auto fu = f.as_unipoly_in(eliminated);
    auto gu = g.as_unipoly_in(eliminated);
    if (fu.degree() <= 0 && gu.degree() <= 0)
        throw DomainError("nothing to eliminate: both inputs constant in the variable");
    return sylvester_resultant(fu, gu);
}

}  // namespace jacsys
