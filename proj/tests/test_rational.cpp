#include "doctest.h"

#include "circhad/rational.hpp"

using circhad::Rational;

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));  // sign moves to the numerator
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(6, 3).denominator() == 1);
}

TEST_CASE("construction rejects a zero denominator") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("str renders lowest terms, denominator 1 omitted") {
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-2, 6).str() == "-1/3");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("field arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    // 1/3 has no finite binary expansion; summing it three times must give
    // exactly one.
    Rational third(1, 3);
    Rational sum(0);
    for (int i = 0; i < 3; ++i) sum += third;
    CHECK(sum == Rational(1));
}

TEST_CASE("comparisons follow the rational order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("mod reduces integers to the least non-negative residue") {
    CHECK(Rational(7).mod(3) == 1);
    CHECK(Rational(-7).mod(3) == 2);
    CHECK(Rational(6).mod(3) == 0);
    CHECK(Rational(5).mod(1) == 0);
    CHECK_THROWS(Rational(1, 2).mod(3));
}

TEST_CASE("mod handles values beyond 64 bits") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(10);  // 10^40
    CHECK(big.mod(9) == 1);  // 10^k = 1 (mod 9)
}
