#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jacsys/rational.hpp"

using namespace jacsys;

TEST_CASE("rational parsing round-trips") {
    CHECK(to_string(parse_rational("3/4")) == "3/4");
    CHECK(to_string(parse_rational("-3/4")) == "-3/4");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK(to_string(parse_rational("  7 ")) == "7");
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-0/5") == Rational(0));
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("a/b"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
}

TEST_CASE("rational powers including negative exponents") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), 0) == Rational(1));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(-2), 5) == Rational(-32));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), DomainError);
}

TEST_CASE("generalized binomial coefficients") {
    // binom(1/2, k) drives the square-root series: 1, 1/2, -1/8, 1/16, -5/128.
    CHECK(rational_binomial(Rational(1, 2), 0) == Rational(1));
    CHECK(rational_binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(rational_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(rational_binomial(Rational(1, 2), 3) == Rational(1, 16));
    CHECK(rational_binomial(Rational(1, 2), 4) == Rational(-5, 128));
    CHECK(rational_binomial(Rational(5), 2) == Rational(10));
    CHECK(rational_binomial(Rational(5), 7) == Rational(0));
}

TEST_CASE("integer nth roots") {
    CHECK(integer_nth_root(BigInt(27), 3) == BigInt(3));
    CHECK(integer_nth_root(BigInt(1024), 2) == BigInt(32));
    CHECK(!integer_nth_root(BigInt(26), 3).has_value());
    CHECK(integer_nth_root(BigInt(-27), 3) == BigInt(-3));
    CHECK(!integer_nth_root(BigInt(-4), 2).has_value());
    CHECK(integer_nth_root(BigInt(0), 5) == BigInt(0));
    CHECK(integer_nth_root(BigInt(1), 9) == BigInt(1));
}

TEST_CASE("rational nth roots") {
    CHECK(rational_nth_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(rational_nth_root(Rational(9, 4), 2) == Rational(3, 2));
    CHECK(!rational_nth_root(Rational(2), 2).has_value());
    CHECK(rational_nth_root(Rational(-8), 3) == Rational(-2));
    CHECK(!rational_nth_root(Rational(-9), 2).has_value());
}

TEST_CASE("property: pow law a^(i+j) = a^i * a^j", "[property]") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12), expo(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a(num(rng), den(rng));
        if (a == 0) continue;
        long i = expo(rng), j = expo(rng);
        CHECK(rational_pow(a, i + j) == rational_pow(a, i) * rational_pow(a, j));
    }
}
