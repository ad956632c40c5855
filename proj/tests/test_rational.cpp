#include "spinmod/error.hpp"
#include "spinmod/rational.hpp"

#include <doctest.h>

using spinmod::Rational;

TEST_CASE("canonical p/q text") {
    CHECK(Rational(6).str() == "6/1");
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(3, -9).str() == "-1/3");
    CHECK(Rational().str() == "0/1");
    CHECK(Rational::parse("18") == Rational(18));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse(Rational(7, 3).str()) == Rational(7, 3));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(-2) == Rational(-1));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) < Rational(0));
    CHECK(Rational(7, 2).is_integer() == false);
    CHECK(Rational(-3).sign() == -1);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS((void)Rational::parse("1/0"), spinmod::ParseError);
    CHECK_THROWS_AS((void)Rational::parse("abc"), spinmod::ParseError);
    CHECK_THROWS_AS((void)Rational::parse("1/2/3"), spinmod::ParseError);
}
