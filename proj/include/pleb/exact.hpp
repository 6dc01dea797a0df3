#pragma once

#include <cstdint>
#include <string>

namespace pleb {

// Exact rational scalar over int64. The coefficient work in this code base
// only ever multiplies a handful of small fractions together, so a fixed
// 64-bit numerator/denominator is ample; every arithmetic op still checks
// for overflow and throws rather than silently wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

  constexpr Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
  double to_double() const { return double(num) / double(den); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& r);
  Rational& operator-=(const Rational& r);
  Rational& operator*=(const Rational& r);
  Rational& operator/=(const Rational& r);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
};

Rational abs(const Rational& r);

// Element of the quadratic field Q(sqrt 2), stored as a + b*sqrt2. Closed
// under +,-,*,/ which is exactly what the operator tables need: every
// constant that appears in them lives in this field.
struct RootTwo {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(2)

  constexpr RootTwo() = default;
  RootTwo(std::int64_t n) : a(n) {}  // NOLINT(google-explicit-constructor)
  RootTwo(Rational ra) : a(ra) {}    // NOLINT(google-explicit-constructor)
  RootTwo(Rational ra, Rational rb) : a(ra), b(rb) {}

  static RootTwo zero() { return RootTwo(); }
  static RootTwo one() { return RootTwo(1); }
  static RootTwo sqrt2() { return RootTwo(Rational(0), Rational(1)); }
  // 1/sqrt2 == sqrt2/2
  static RootTwo inv_sqrt2() { return RootTwo(Rational(0), Rational(1, 2)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }
  double to_double();
  double to_double() const;
  std::string str() const;

  RootTwo operator-() const { return RootTwo(-a, -b); }
  RootTwo& operator+=(const RootTwo& r);
  RootTwo& operator-=(const RootTwo& r);
  RootTwo& operator*=(const RootTwo& r);
  RootTwo& operator/=(const RootTwo& r);

  friend RootTwo operator+(RootTwo x, const RootTwo& y) { return x += y; }
  friend RootTwo operator-(RootTwo x, const RootTwo& y) { return x -= y; }
  friend RootTwo operator*(RootTwo x, const RootTwo& y) { return x *= y; }
  friend RootTwo operator/(RootTwo x, const RootTwo& y) { return x /= y; }
  friend bool operator==(const RootTwo& x, const RootTwo& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const RootTwo& x, const RootTwo& y) { return !(x == y); }
};

// Parses "n", "n/d", "sqrt2", "3/2*sqrt2", "1+1/2*sqrt2", "-sqrt2/2", ...
// Whitespace is ignored; "r2" is accepted as a shorthand for "sqrt2".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);
RootTwo parse_root_two(const std::string& text);

}  // namespace pleb
