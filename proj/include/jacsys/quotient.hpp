#pragma once

// Arithmetic in quotient rings K[t]/(h) with K the rationals and h monic.
//
// Elements carry a shared pointer to their ring; ring-less elements act as
// plain rational constants and adopt the other operand's ring on contact,
// which lets QuotientElement satisfy the generic coefficient-ring
// interface (constructible from integers) used by the polynomial and
// series templates.
//
// Inversion runs the extended Euclidean algorithm.  When the modulus is
// not irreducible an inversion can meet a zero divisor; the error then
// carries the nontrivial factor of the modulus that was discovered, so
// callers may split the ring and retry.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace jacsys {

class NonInvertibleError : public DomainError {
public:
    NonInvertibleError(UniPoly<Rational> factor, const std::string& what)
        : DomainError(what), factor_(std::move(factor)) {}
    // A monic nontrivial factor of the modulus witnessing the failure.
    const UniPoly<Rational>& factor() const { return factor_; }

private:
    UniPoly<Rational> factor_;
};

// Cyclotomic polynomial of order e (cached; exact division recursion).
inline const UniPoly<Rational>& cyclotomic_polynomial(unsigned e) {
    static std::map<unsigned, UniPoly<Rational>> cache;
    if (e == 0) throw DomainError("cyclotomic order must be positive");
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    UniPoly<Rational> xe = UniPoly<Rational>::monomial(e, 1) - UniPoly<Rational>(1);
    for (unsigned d = 1; d < e; ++d)
        if (e % d == 0) xe = div_exact(xe, cyclotomic_polynomial(d));
    return cache.emplace(e, std::move(xe)).first->second;
}

class QuotientRing {
public:
    static std::shared_ptr<const QuotientRing> make(UniPoly<Rational> modulus) {
        if (modulus.degree() < 1) throw DomainError("quotient modulus must have positive degree");
        return std::shared_ptr<const QuotientRing>(new QuotientRing(make_monic(modulus), std::nullopt));
    }

    // The e-th cyclotomic field; the generator is a primitive e-th root of unity.
    static std::shared_ptr<const QuotientRing> cyclotomic(unsigned e) {
        return std::shared_ptr<const QuotientRing>(new QuotientRing(cyclotomic_polynomial(e), e));
    }

    const UniPoly<Rational>& modulus() const { return modulus_; }
    long degree() const { return modulus_.degree(); }
    std::optional<unsigned> cyclotomic_order() const { return order_; }
    std::string generator_name() const { return order_ ? "u" : "t"; }

private:
    QuotientRing(UniPoly<Rational> m, std::optional<unsigned> order)
        : modulus_(std::move(m)), order_(order) {}

    UniPoly<Rational> modulus_;
    std::optional<unsigned> order_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

class QuotientElement {
public:
    QuotientElement() = default;
    QuotientElement(long c) : rep_(Rational(c)) {}                // NOLINT (implicit)
    QuotientElement(const Rational& c) : rep_(c) {}               // NOLINT (implicit)
    QuotientElement(QuotientRingPtr ring, UniPoly<Rational> rep) : ring_(std::move(ring)) {
        rep_ = ring_ ? rem(std::move(rep), ring_->modulus()) : std::move(rep);
    }

    static QuotientElement generator(const QuotientRingPtr& ring) {
        return QuotientElement(ring, UniPoly<Rational>::x());
    }

    const QuotientRingPtr& ring() const { return ring_; }
    const UniPoly<Rational>& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational as_rational() const {
        if (!is_rational()) throw DomainError("element is not rational");
        return rep_.coeff(0);
    }

    bool operator==(const QuotientElement& o) const {
        check_compatible(o);
        return rep_ == o.rep_;
    }
    bool operator!=(const QuotientElement& o) const { return !(*this == o); }

    QuotientElement operator-() const { return with(ring_, -rep_); }

    friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
        const auto& r = a.unified_ring(b);
        return with(r, a.rep_ + b.rep_);
    }
    friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
        const auto& r = a.unified_ring(b);
        return with(r, a.rep_ - b.rep_);
    }
    friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
        const auto& r = a.unified_ring(b);
        UniPoly<Rational> p = a.rep_ * b.rep_;
        return QuotientElement(r, std::move(p));
    }
    QuotientElement& operator+=(const QuotientElement& o) { return *this = *this + o; }
    QuotientElement& operator-=(const QuotientElement& o) { return *this = *this - o; }
    QuotientElement& operator*=(const QuotientElement& o) { return *this = *this * o; }

    QuotientElement inverse() const {
        if (rep_.is_zero())
            throw NonInvertibleError(UniPoly<Rational>(), "inverse of zero");
        if (!ring_) return QuotientElement(1 / rep_.coeff(0));
        auto [g, s, t] = poly_ext_gcd(rep_, ring_->modulus());
        if (g.degree() > 0)
            throw NonInvertibleError(
                g, "element is a zero divisor; modulus has factor " + g.str("t"));
        return QuotientElement(ring_, s / g.coeff(0));
    }

    friend QuotientElement operator/(const QuotientElement& a, const QuotientElement& b) {
        return a * b.inverse();
    }

    QuotientElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuotientElement acc(1), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * b;
            if (k > 1) b = b * b;
        }
        return acc;
    }

    std::string str() const {
        return rep_.str(ring_ ? ring_->generator_name() : "t");
    }

private:
    static QuotientElement with(const QuotientRingPtr& r, UniPoly<Rational> rep) {
        QuotientElement e;
        e.ring_ = r;
        e.rep_ = std::move(rep);
        return e;
    }

    void check_compatible(const QuotientElement& o) const {
        if (ring_ && o.ring_ && ring_ != o.ring_ && !(ring_->modulus() == o.ring_->modulus()))
            throw DomainError("mixing elements of different quotient rings");
    }

    const QuotientRingPtr& unified_ring(const QuotientElement& o) const {
        check_compatible(o);
        return ring_ ? ring_ : o.ring_;
    }

    QuotientRingPtr ring_;           // null: plain rational constant
    UniPoly<Rational> rep_;          // degree < deg(modulus) when ring_ set
};

inline std::string to_string(const QuotientElement& e) { return e.str(); }

// All roots of `h` that are powers of the generator of the e-th cyclotomic
// field, i.e. the e-th roots of unity annihilating h.  When h is a product
// of cyclotomic polynomials of orders dividing e this enumerates every
// root of h exactly.
inline std::vector<QuotientElement> roots_among_roots_of_unity(const UniPoly<Rational>& h,
                                                               unsigned e) {
    auto field = QuotientRing::cyclotomic(e);
    QuotientElement u = QuotientElement::generator(field);
    std::vector<QuotientElement> out;
    for (unsigned j = 0; j < e; ++j) {
        QuotientElement cand = u.pow(j);
        if (h.eval(cand, [](const Rational& c) { return QuotientElement(c); }).is_zero())
            out.push_back(cand);
    }
    return out;
}

}  // namespace jacsys
