#include "doctest.h"
#include "polyifs/angle.hpp"
#include "polyifs/error.hpp"

using namespace polyifs;

TEST_SUITE("angle") {
  TEST_CASE("rationals reduce and keep a positive denominator") {
    const Rational x(6, -8);
    CHECK(x.num() == -3);
    CHECK(x.den() == 4);
    CHECK(x.floor() == -1);
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("exact angles stay exact and reduce mod 1") {
    const CircleAngle a(Rational(7, 4));
    REQUIRE(a.is_exact());
    CHECK(a.exact() == Rational(3, 4));
    const CircleAngle b(Rational(-1, 6));
    CHECK(b.exact() == Rational(5, 6));
    CHECK((a + b).exact() == Rational(7, 12));
    CHECK((a - b).exact() == Rational(11, 12));
    CHECK(a.times(5).exact() == Rational(3, 4));  // 15/4 mod 1
  }

  TEST_CASE("parse picks the mode from the presence of a slash") {
    const auto exact = CircleAngle::parse("2/8");
    REQUIRE(exact.is_exact());
    CHECK(exact.exact() == Rational(1, 4));
    CHECK(exact.to_string() == "1/4");
    CHECK(CircleAngle::parse("0/1").exact() == Rational(0));

    const auto flt = CircleAngle::parse("0.25");
    CHECK_FALSE(flt.is_exact());
    CHECK(flt.value() == 0.25);
    CHECK(CircleAngle::parse("1.75").value() == 0.75);
    CHECK_THROWS_AS((void)flt.exact(), RequiresExactAngle);

    CHECK_THROWS_AS(CircleAngle::parse("1/0"), DomainError);
    CHECK_THROWS_AS(CircleAngle::parse("abc"), DomainError);
    CHECK_THROWS_AS(CircleAngle::parse("1/x"), DomainError);
    CHECK_THROWS_AS(CircleAngle::parse(""), DomainError);
  }

  TEST_CASE("mixing modes falls back to float") {
    const auto sum = CircleAngle(Rational(1, 4)) + CircleAngle::from_double(0.5);
    CHECK_FALSE(sum.is_exact());
    CHECK(sum.value() == doctest::Approx(0.75));
  }

  TEST_CASE("circular distance wraps") {
    CHECK(circular_distance(0.95, 0.05) == doctest::Approx(0.1));
    CHECK(circular_distance(CircleAngle(Rational(19, 20)), CircleAngle(Rational(1, 20))) ==
          doctest::Approx(0.1));
    CHECK(circular_distance(0.0, 0.5) == doctest::Approx(0.5));
  }
}
