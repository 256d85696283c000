#include <doctest.h>

#include <random>

#include "semialg/errors.hpp"
#include "semialg/rational.hpp"

using semialg::Error;
using semialg::Rational;

TEST_CASE("construction normalizes to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).to_string() == "0");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(2, 3), b(1, 3);
    CHECK(a + b == Rational(1));
    CHECK(a - b == Rational(1, 3));
    CHECK(a * b == Rational(2, 9));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-2, 3));
    CHECK(a.reciprocal() == Rational(3, 2));
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
}

TEST_CASE("ordering is numeric") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7) > Rational(13, 2));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("string round-trip") {
    for (const char* s : {"0", "1", "-1", "3/4", "-3/4", "123456789123456789",
                          "-5/7", "2305843009213693951"}) {
        CHECK(Rational::from_string(s).to_string() == s);
    }
    CHECK(Rational::from_string("4/8") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), Error);
    CHECK_THROWS_AS(Rational::from_string("1/"), Error);
    CHECK_THROWS_AS(Rational::from_string("a"), Error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
    CHECK_THROWS_AS(Rational::from_string("1 /2"), Error);
}

TEST_CASE("promotion past 64 bits and demotion back") {
    // 2^40 squared exceeds int64; the value must stay exact.
    const Rational big = Rational(1LL << 40) * Rational(1LL << 40);
    CHECK_FALSE(big.fits_int64());
    CHECK(big.to_string() == "1208925819614629174706176");
    CHECK(big / Rational(1LL << 40) == Rational(1LL << 40));
    CHECK((big / Rational(1LL << 40)).fits_int64());
    CHECK(big - big == Rational(0));
    CHECK((big - big).fits_int64());

    // Mixed big/small arithmetic.
    const Rational r = big + Rational(1, 3);
    CHECK(r - big == Rational(1, 3));
    CHECK(r > big);
    CHECK((Rational(1) / big).num_bits() == 1);
    CHECK((Rational(1) / big).den_bits() == 81);

    // A denominator can promote too.
    Rational tiny = Rational(1, 3);
    for (int i = 0; i < 6; ++i) tiny = tiny * tiny;
    CHECK_FALSE(tiny.fits_int64());
    CHECK(tiny.to_string().substr(0, 2) == "1/");
}

TEST_CASE("field laws on random small rationals") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int iter = 0; iter < 500; ++iter) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("bit lengths") {
    CHECK(Rational(0).num_bits() == 0);
    CHECK(Rational(1).num_bits() == 1);
    CHECK(Rational(-4).num_bits() == 3);
    CHECK(Rational(1, 1024).den_bits() == 11);
}
