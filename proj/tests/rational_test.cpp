#include "inforest/rational.hpp"

#include <doctest.h>

#include <cstdint>

using inforest::ArithmeticOverflow;
using inforest::Rational;

TEST_CASE("rational normalization and ordering") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(3, -2));
  CHECK(Rational(-6, 4).den() == 2);
  CHECK(Rational(-6, 4).num() == -3);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(25, 27) > Rational(5, 9));
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(25, 27), b(5, 27);
  CHECK(a - b * 2 == Rational(5, 9));
  CHECK(a + b == Rational(10, 9));
  CHECK(a * Rational(27) == Rational(25));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(-Rational(5, 27) == Rational(-5, 27));
  CHECK(Rational(7, 3).sign() == 1);
  CHECK(Rational(-7, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("5/27") == Rational(5, 27));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational(5, 27).str() == "5/27");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational::parse("x"), inforest::InvalidInput);
}

TEST_CASE("rational overflow is loud, not silent") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rational(8), ArithmeticOverflow);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticOverflow);
  CHECK_THROWS_AS(Rational(3) / Rational(0), ArithmeticOverflow);
  // Large but reducible products survive thanks to cross-reduction.
  Rational x(INT64_MAX / 3, 5);
  CHECK(x * Rational(5, INT64_MAX / 3) == Rational(1));
}
