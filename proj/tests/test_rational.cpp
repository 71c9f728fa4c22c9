#include <doctest.h>

#include <limits>

#include "mpg/checked.hpp"
#include "mpg/rational.hpp"

using mpg::Rational;

TEST_CASE("fractions are kept reduced with a positive denominator")
{
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, -5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(-3, 4) * Rational(2, 3) == Rational(-1, 2));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK(Rational(-1, 3) < Rational(-1, 4));
    CHECK(Rational(2, 3) > Rational(3, 5));
}

TEST_CASE("floor rounds towards minus infinity")
{
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("text form")
{
    CHECK(Rational(-1).str() == "-1/1");
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("overflow is reported, not wrapped")
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(mpg::checked_add(big, 1), mpg::OverflowError);
    CHECK_THROWS_AS(mpg::checked_mul(big, 2), mpg::OverflowError);
    CHECK_THROWS_AS(Rational(big) + Rational(1), mpg::OverflowError);
    // Intermediate products may exceed 64 bits as long as the result fits.
    CHECK(Rational(big, 2) * Rational(2, big) == Rational(1));
}
