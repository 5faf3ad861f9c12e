#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals in
// lowest terms, plus the handful of number-theoretic helpers the rest of
// the library leans on (rational binomial coefficients, perfect roots,
// deterministic parsing/printing).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace jacsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for every error the library raises on bad mathematical input
// (as opposed to programming errors, which use assertions).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    // The two-argument cpp_rational constructor rejects negative
    // denominators (its overflow guard misfires for unbounded integers),
    // so fold the sign into the numerator before constructing.
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_zero(const Rational& r) { return r == 0; }

// Parses "p", "-p" or "p/q" with optional surrounding whitespace.
inline Rational parse_rational(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos) throw DomainError("empty rational literal");
    std::string s = text.substr(a, b - a + 1);
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        throw DomainError("malformed rational literal '" + text + "'");
    }
}

// Canonical form: "p" when integral, else "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational_pow(const Rational& base, long e) {
    if (e >= 0) {
        Rational acc = 1, b = base;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }
    if (base == 0) throw DomainError("zero raised to a negative power");
    return 1 / rational_pow(base, -e);
}

// Generalized binomial coefficient binom(a, k) for rational a and k >= 0.
inline Rational rational_binomial(const Rational& a, long k) {
    if (k < 0) return 0;
    Rational acc = 1;
    for (long j = 0; j < k; ++j) acc *= (a - j) / Rational(j + 1);
    return acc;
}

// Exact integer e-th root when it exists.
inline std::optional<BigInt> integer_nth_root(const BigInt& value, unsigned e) {
    if (e == 0) throw DomainError("zeroth root");
    if (value < 0) {
        if (e % 2 == 0) return std::nullopt;
        auto r = integer_nth_root(-value, e);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (value == 0 || value == 1) return value;
    // Newton bracketing on integers: deterministic and cheap at our sizes.
    BigInt lo = 1, hi = value;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned i = 0; i < e; ++i) {
            p *= mid;
            if (p > value) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    BigInt p = 1;
    for (unsigned i = 0; i < e; ++i) p *= lo;
    if (p == value) return lo;
    return std::nullopt;
}

// Exact rational e-th root when it exists.
inline std::optional<Rational> rational_nth_root(const Rational& value, unsigned e) {
    auto num = integer_nth_root(numerator(value), e);
    if (!num) return std::nullopt;
    auto den = integer_nth_root(denominator(value), e);
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

}  // namespace jacsys
