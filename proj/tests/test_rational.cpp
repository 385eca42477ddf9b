#include <doctest.h>

#include "uhs/rational.hpp"

using uhs::Rat;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(6, 3).num() == 2);
  CHECK(Rat(6, 3).den() == 1);
}

TEST_CASE("arithmetic and comparisons are exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(-1, 2).abs() == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rat::parse("1/2") == Rat(1, 2));
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-2/6") == Rat(-1, 3));
  CHECK(Rat(7, 10).str() == "7/10");
  CHECK(Rat(4).str() == "4");
  CHECK(Rat(0).str() == "0");
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("0.5"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
