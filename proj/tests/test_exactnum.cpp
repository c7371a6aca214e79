#include <doctest.h>

#include "chi/error.hpp"
#include "chi/exactnum.hpp"

using namespace chi;

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("+2/7") == Rational(2, 7));
  CHECK(Rational::parse("0/5").str() == "0");
  for (auto bad : {"", "/", "3/", "a", "3/-4", "1 /2", "1/0", "--1"}) {
    INFO(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("arithmetic is exact") {
  const Rational a(2, 7), b(-13, 7);
  CHECK(a + b == Rational(-11, 7));
  CHECK(a * b == Rational(-26, 49));
  CHECK(a / b == Rational(-2, 13));
  CHECK(a.inverse() == Rational(7, 2));
  CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(a < Rational(1, 3));
}

TEST_CASE("modular reduction") {
  CHECK(Rational(2, 7).mod(5) == 1);  // 2 * 3 = 6
  CHECK(Rational(-1).mod(11) == 10);
  CHECK(Rational(-8, 19).mod(7) == 4);
  CHECK_THROWS_AS(Rational(1, 7).mod(7), Error);
  CHECK(Rational(6, 35).den_divisible_by(5));
  CHECK(Rational(6, 35).num_divisible_by(3));
  CHECK(mod_ui(BigInt(-3), 7) == 4);
  CHECK(mod_floor(BigInt(-3), BigInt(7)) == 4);
}

TEST_CASE("square classes") {
  auto s = is_square(Rational(49, 9));
  REQUIRE(s.is_square());
  CHECK(*s.root == Rational(7, 3));
  CHECK(is_square(Rational(2)).kind == SquareKind::NonSquare);
  CHECK(is_square(Rational(-4)).kind == SquareKind::NegativeNonSquare);
  CHECK(is_square(Rational(0)).is_square());
  // (2/7)^2 - 4 = -192/49 = -3 (8/7)^2
  auto c = is_r_scaled_square(Rational(2, 7) * Rational(2, 7) - 4, 3, -1);
  REQUIRE(c.is_square());
  CHECK(*c.root == Rational(8, 7));
  CHECK_FALSE(is_r_scaled_square(Rational(5), 3, 1).is_square());
}

TEST_CASE("integer roots") {
  CHECK(rth_root(BigInt(343), 3) == BigInt(7));
  CHECK_FALSE(rth_root(BigInt(344), 3).has_value());
  CHECK(rth_root(BigInt(1) << 60, 5) == BigInt(4096));
}
