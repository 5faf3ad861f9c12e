#pragma once

// Truncated Laurent series in descending powers of x over a generic
// coefficient ring.
//
// A series stores exact coefficients for every degree in [cutoff, lead];
// everything below the cutoff is unknown, and every operation propagates
// the cutoff so that no computed coefficient silently depends on unknown
// data:
//     cutoff(a*b)   = max(cutoff(a) + lead(b), cutoff(b) + lead(a))
//     cutoff(a^-1)  = cutoff(a) - 2*lead(a)
//     cutoff(P^1/n) = cutoff(P) - (n-1)*lead(P)/n
// Exactly-known series (finite Laurent polynomials) use an "exact" cutoff
// sentinel and stay exact under ring operations.  Reading a coefficient
// below the cutoff raises TruncationError.

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace jacsys {

class TruncationError : public DomainError {
public:
    explicit TruncationError(const std::string& what) : DomainError(what) {}
};

template <typename R>
class LaurentSeries {
public:
    // Cutoff value meaning "known at every degree".
    static constexpr long kExact = std::numeric_limits<long>::min() / 4;

    LaurentSeries() : cutoff_(kExact) {}  // exact zero
    explicit LaurentSeries(long cutoff) : cutoff_(clamp(cutoff)) {}

    static LaurentSeries monomial(long degree, const R& c) {
        LaurentSeries s;
        s.set_coeff(degree, c);
        return s;
    }

    static LaurentSeries x_power(long degree) { return monomial(degree, R(1)); }

    static LaurentSeries from_unipoly(const UniPoly<R>& p) {
        LaurentSeries s;
        for (long i = 0; i <= p.degree(); ++i) s.set_coeff(i, p.coeff(i));
        return s;
    }

    long cutoff() const { return cutoff_; }
    bool is_exact() const { return cutoff_ == kExact; }
    bool has_terms() const { return !c_.empty(); }
    bool is_known_zero() const { return c_.empty(); }

    // Largest degree with a nonzero known coefficient.
    long lead_exponent() const {
        if (c_.empty()) throw DomainError("leading exponent of a series with no known terms");
        return c_.rbegin()->first;
    }
    const R& lead_coeff() const {
        if (c_.empty()) throw DomainError("leading coefficient of a series with no known terms");
        return c_.rbegin()->second;
    }

    // Lead exponent used in cutoff bookkeeping: for a series with no known
    // terms the first possibly-nonzero degree is just below the cutoff.
    long lead_bound() const { return c_.empty() ? cutoff_ - 1 : c_.rbegin()->first; }

    R coeff(long degree) const {
        if (degree < cutoff_)
            throw TruncationError("coefficient of x^" + std::to_string(degree) +
                                  " is below the truncation cutoff x^" + std::to_string(cutoff_));
        auto it = c_.find(degree);
        return it == c_.end() ? R(0) : it->second;
    }

    void set_coeff(long degree, const R& value) {
        if (value == R(0)) c_.erase(degree);
        else c_[degree] = value;
        if (degree < cutoff_) cutoff_ = degree;  // extending knowledge downward
    }

    const std::map<long, R>& known_terms() const { return c_; }

    // Forget everything below new_cutoff.
    LaurentSeries truncated(long new_cutoff) const {
        LaurentSeries out(std::max(cutoff_, new_cutoff));
        for (auto& [d, v] : c_)
            if (d >= out.cutoff_) out.c_.emplace(d, v);
        return out;
    }

    bool operator==(const LaurentSeries& o) const {
        return cutoff_ == o.cutoff_ && c_ == o.c_;
    }

    LaurentSeries operator-() const {
        LaurentSeries out = *this;
        for (auto& [d, v] : out.c_) v = -v;
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(std::max(a.cutoff_, b.cutoff_));
        for (auto& [d, v] : a.c_)
            if (d >= out.cutoff_) out.accumulate(d, v);
        for (auto& [d, v] : b.c_)
            if (d >= out.cutoff_) out.accumulate(d, v);
        return out;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return mul_window(a, b, kExact);
    }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries operator*(const R& s) const {
        LaurentSeries out(cutoff_);
        for (auto& [d, v] : c_) out.accumulate(d, v * s);
        return out;
    }

    // Product restricted to output degrees >= window_low (used to keep
    // power computations cheap when only a band of coefficients matters).
    // The result's cutoff reflects the window: knowledge is only claimed
    // where coefficients were actually computed.
    static LaurentSeries mul_window(const LaurentSeries& a, const LaurentSeries& b,
                                    long window_low) {
        long cut;
        if (a.is_exact() && b.is_exact()) cut = kExact;
        else if (a.is_exact()) cut = clamp(b.cutoff_ + a.lead_bound());
        else if (b.is_exact()) cut = clamp(a.cutoff_ + b.lead_bound());
        else cut = clamp(std::max(a.cutoff_ + b.lead_bound(), b.cutoff_ + a.lead_bound()));
        LaurentSeries out(std::max(cut, window_low));
        for (auto& [da, va] : a.c_) {
            for (auto& [db, vb] : b.c_) {
                long d = da + db;
                if (d < out.cutoff_) continue;
                out.accumulate(d, va * vb);
            }
        }
        return out;
    }

    LaurentSeries pow(long e, std::optional<long> window_low = std::nullopt) const {
        if (e < 0) {
            // a^e = (a^-1)^(-e); the inverse must reach -e-1 lead-widths
            // beyond the requested window for the later powering to land.
            std::optional<long> inv_target;
            if (window_low && has_terms())
                inv_target = *window_low + (-e - 1) * lead_exponent();
            return inverse(inv_target).pow(-e, window_low);
        }
        if (e == 0) return x_power(0);
        if (window_low && has_terms()) {
            // Sequential products with a per-step window: each remaining
            // multiplication erodes knowledge by lead(base), so step i is
            // computed down to (e-1-i)*lead below the final target.  The
            // per-step band has constant width, so this stays cheap even
            // for exact (infinitely precise) inputs.
            const long L = lead_exponent();
            LaurentSeries acc = x_power(0);
            for (long i = 0; i < e; ++i)
                acc = mul_window(acc, *this, *window_low - (e - 1 - i) * L);
            return acc;
        }
        // No window requested: binary powering under natural cutoffs.
        LaurentSeries acc = x_power(0);
        LaurentSeries base = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            if (k > 1) base = base * base;
        }
        return acc;
    }

    // Multiplicative inverse.  Requires an invertible leading coefficient.
    // For an exact input the expansion is infinite, so a target cutoff is
    // mandatory; for truncated input the natural depth cutoff-2*lead is
    // used (intersected with the target when given).
    LaurentSeries inverse(std::optional<long> target_cutoff = std::nullopt) const {
        if (c_.empty()) throw DomainError("inverse of a series with no known terms");
        const long d = lead_exponent();
        const R& L = lead_coeff();
        R Linv = R(1) / L;
        long natural = is_exact() ? kExact : clamp(cutoff_ - 2 * d);
        long target;
        if (is_exact()) {
            if (!target_cutoff)
                throw DomainError("inverse of an exact series needs an explicit cutoff");
            target = *target_cutoff;
        } else {
            target = target_cutoff ? std::max(natural, *target_cutoff) : natural;
        }
        LaurentSeries out(target);
        out.accumulate(-d, Linv);
        for (long g = -d - 1; g >= target; --g) {
            // 0 = sum_{i <= d} a_i b_{g+d-i}; solve for b_g.
            R s(0);
            for (auto& [i, ai] : c_) {
                if (i == d) continue;
                long j = g + d - i;
                if (j > -d) continue;  // above the inverse's leading degree
                auto it = out.c_.find(j);
                if (it != out.c_.end()) s = s + ai * it->second;
            }
            R bg = -(Linv * s);
            if (!(bg == R(0))) out.c_[g] = bg;
        }
        out.cutoff_ = target;
        return out;
    }

    std::string str(const std::string& scalar_open = "(", const std::string& scalar_close = ")") const {
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            using jacsys::to_string;
            out += scalar_open + to_string(it->second) + scalar_close + "*x^" +
                   std::to_string(it->first);
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(x^" + std::to_string(cutoff_ - 1) + ")";
        return out;
    }

private:
    static long clamp(long c) { return c <= kExact / 2 ? kExact : c; }

    void accumulate(long d, const R& v) {
        if (d < cutoff_) return;
        auto it = c_.find(d);
        if (it == c_.end()) {
            if (!(v == R(0))) c_.emplace(d, v);
        } else {
            it->second = it->second + v;
            if (it->second == R(0)) c_.erase(it);
        }
    }

    long cutoff_;
    std::map<long, R> c_;
};

// Monic n-th root of P = x^N (1 + lower-order terms).  The root is
// computed coefficient by coefficient from the defining relation C^n = P;
// each step divides by n, which is the only division performed, so the
// computation is valid over any ring of characteristic zero.  For exact P
// the expansion is infinite and target_cutoff is required.
template <typename R>
LaurentSeries<R> monic_nth_root(const LaurentSeries<R>& P, long n,
                                std::optional<long> target_cutoff = std::nullopt) {
    if (n < 1) throw DomainError("root order must be a positive integer");
    if (!P.has_terms()) throw DomainError("root of a series with no known terms");
    if (!(P.lead_coeff() == R(1))) throw DomainError("series is not monic");
    const long N = P.lead_exponent();
    if (N % n != 0) throw DomainError("leading exponent not divisible by the root order");
    const long M = N / n;
    long natural = P.is_exact() ? LaurentSeries<R>::kExact : P.cutoff() - (n - 1) * M;
    long target;
    if (P.is_exact()) {
        if (!target_cutoff) throw DomainError("root of an exact series needs an explicit cutoff");
        target = *target_cutoff;
    } else {
        target = target_cutoff ? std::max(natural, *target_cutoff) : natural;
    }

    LaurentSeries<R> C = LaurentSeries<R>::x_power(M);  // exact partial sum
    const R inv_n = R(1) / R(n);
    for (long g = M - 1; g >= target; --g) {
        // The coefficient of x^{(n-1)M + g} in C^n is n*C_g plus terms in
        // already-known coefficients; the loop bound keeps e >= cutoff(P).
        long e = (n - 1) * M + g;
        R rhs = P.coeff(e);
        R have = C.pow(n, e).coeff(e);
        R cg = (rhs - have) * inv_n;
        if (!(cg == R(0))) C.set_coeff(g, cg);
    }
    // The partial sum is exact as a polynomial, but the root is only
    // trusted down to the target depth.
    return C.truncated(target);
}

// Coefficients of f on the window of degrees [high, low] (inclusive,
// descending).  Raises TruncationError when the window dips below the
// cutoff.
template <typename R>
std::vector<R> project(const LaurentSeries<R>& f, long high, long low) {
    if (high < low) throw DomainError("empty projection window");
    if (!f.is_exact() && low < f.cutoff())
        throw TruncationError("insufficient truncation order for the requested window");
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(high - low + 1));
    for (long d = high; d >= low; --d) out.push_back(f.coeff(d));
    return out;
}

// Split into the polynomial part (degrees >= 0, exactly known) and the
// principal part (degrees < 0, inheriting the cutoff).
template <typename R>
std::pair<LaurentSeries<R>, LaurentSeries<R>> split(const LaurentSeries<R>& f) {
    if (!f.is_exact() && f.cutoff() > 0)
        throw TruncationError("cannot split: polynomial part not fully known");
    LaurentSeries<R> plus;  // exact
    LaurentSeries<R> minus(f.is_exact() ? LaurentSeries<R>::kExact : f.cutoff());
    for (auto& [d, v] : f.known_terms()) {
        if (d >= 0) plus.set_coeff(d, v);
        else minus.set_coeff(d, v);
    }
    return {plus, minus};
}

template <typename R>
UniPoly<R> polynomial_part(const LaurentSeries<R>& f) {
    auto [plus, minus] = split(f);
    (void)minus;
    UniPoly<R> p;
    for (auto& [d, v] : plus.known_terms()) p.set_coeff(d, v);
    return p;
}

}  // namespace jacsys
