#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pleb/exact.hpp"

using pleb::Rational;
using pleb::RootTwo;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 1).den == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field operations") {
  const Rational a(3, 4), b(-2, 3);
  CHECK(a + b == Rational(1, 12));
  CHECK(a - b == Rational(17, 12));
  CHECK(a * b == Rational(-1, 2));
  CHECK(a / b == Rational(-9, 8));
  CHECK(-a == Rational(-3, 4));
  CHECK(abs(b) == Rational(2, 3));
  CHECK(b < a);
  CHECK(a.to_double() == doctest::Approx(0.75));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  const Rational big(std::int64_t(1) << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("root-two arithmetic stays in the field") {
  const RootTwo s2 = RootTwo::sqrt2();
  CHECK(s2 * s2 == RootTwo(2));
  CHECK(RootTwo::inv_sqrt2() * s2 == RootTwo(1));
  // (1 + sqrt2)(1 - sqrt2) = -1, so 1/(1 + sqrt2) = -1 + sqrt2
  const RootTwo x(Rational(1), Rational(1));
  CHECK(x * RootTwo(Rational(1), Rational(-1)) == RootTwo(-1));
  CHECK(RootTwo(1) / x == RootTwo(Rational(-1), Rational(1)));
  CHECK((x - x).is_zero());
  CHECK(x.to_double() == doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("root-two division round trips") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const RootTwo a{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    const RootTwo b{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (b.is_zero()) continue;
    CHECK(a / b * b == a);
  }
}

TEST_CASE("parser accepts the documented forms") {
  CHECK(pleb::parse_rational("1/4") == Rational(1, 4));
  CHECK(pleb::parse_rational("-12") == Rational(-12));
  CHECK(pleb::parse_root_two("sqrt2") == RootTwo::sqrt2());
  CHECK(pleb::parse_root_two("r2") == RootTwo::sqrt2());
  CHECK(pleb::parse_root_two("-sqrt2") == -RootTwo::sqrt2());
  CHECK(pleb::parse_root_two("3/2*sqrt2") == RootTwo(Rational(0), Rational(3, 2)));
  CHECK(pleb::parse_root_two("1+1/2*sqrt2") == RootTwo(Rational(1), Rational(1, 2)));
  CHECK(pleb::parse_root_two("sqrt2/2") == RootTwo::inv_sqrt2());
  CHECK(pleb::parse_root_two(" 1 - sqrt2 ") == RootTwo(Rational(1), Rational(-1)));
  CHECK_THROWS_AS(pleb::parse_root_two("sqrt3"), std::invalid_argument);
  CHECK_THROWS_AS(pleb::parse_root_two(""), std::invalid_argument);
  CHECK_THROWS_AS(pleb::parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("str output parses back to the same value") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const RootTwo v{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    CHECK(pleb::parse_root_two(v.str()) == v);
  }
  CHECK(RootTwo(Rational(1, 4)).str() == "1/4");
  CHECK(RootTwo(-1).str() == "-1");
  CHECK(RootTwo::sqrt2().str() == "sqrt2");
}
