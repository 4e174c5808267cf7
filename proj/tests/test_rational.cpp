#include <doctest.h>

#include <cstdint>

#include "famc/errors.hpp"
#include "famc/rational.hpp"

using famc::Rational;

TEST_CASE("rationals are stored canonically") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(21, 5).num() == 21);
    CHECK(Rational(21, 5).den() == 5);
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
}

TEST_CASE("zero denominator refused") {
    CHECK_THROWS_AS(Rational(1, 0), famc::OverflowError);
    CHECK_THROWS_AS(Rational(3) / Rational(0), famc::OverflowError);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(-Rational(1, 2) == Rational(-1, 2));

    Rational acc;
    for (int d = 1; d <= 3; ++d) acc += Rational(1, d);
    CHECK(acc == Rational(11, 6));

    // Johnson's formula for Hr(3,1): (9*1 + 2*27)/27
    Rational am = (Rational(9) * 1 + Rational(2) * 27) / Rational(27);
    CHECK(am == Rational(7, 3));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(3, 2) <= Rational(3, 2));
    CHECK(Rational(43, 7) > Rational(21, 5));
    CHECK(Rational(1) >= Rational(7, 8));
}

TEST_CASE("string form") {
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4, 4).str() == "1");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
}

TEST_CASE("overflow is loud") {
    const long long big = INT64_MAX / 2 + 1;
    CHECK_THROWS_AS(Rational(big) + Rational(big), famc::OverflowError);
    CHECK_THROWS_AS(Rational(big) * Rational(big), famc::OverflowError);
    // 128-bit intermediates survive when the reduced result fits
    CHECK(Rational(big, 2) * Rational(2, big) == Rational(1));
}
