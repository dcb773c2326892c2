#include <doctest.h>

#include "rbla/errors.hpp"
#include "rbla/rational.hpp"

#include <random>

using rbla::Rational;

TEST_CASE("rationals are kept canonical") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("parse accepts p and p/q and rejects garbage") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("17") == Rational(17));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1 ", "+1", "a",
                          "1/-2", "--1", "0x1", "1/2/3"})
    CHECK_THROWS_AS(Rational::parse(bad), rbla::parse_error);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), rbla::arithmetic_error);
  CHECK_THROWS_AS(Rational(1, 0), rbla::arithmetic_error);
}

TEST_CASE("arithmetic is exact: (p/q + r/s) - r/s = p/q") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int t = 0; t < 500; ++t) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * b - b * a == Rational(0));
  }
}

TEST_CASE("ordering is consistent with sign") {
  CHECK(Rational(-1, 3) < Rational(1, 4));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(-2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
}
