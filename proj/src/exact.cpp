#include "pleb/exact.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace pleb {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out))
    throw std::overflow_error("rational overflow in multiply");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out))
    throw std::overflow_error("rational overflow in add");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::operator-() const {
  Rational r;
  r.num = -num;
  r.den = den;
  return r;
}

Rational& Rational::operator+=(const Rational& r) {
  *this = Rational(checked_add(checked_mul(num, r.den), checked_mul(r.num, den)),
                   checked_mul(den, r.den));
  return *this;
}

Rational& Rational::operator-=(const Rational& r) { return *this += -r; }

Rational& Rational::operator*=(const Rational& r) {
  // reduce cross factors first to keep intermediates small
  const Rational x(num, r.den), y(r.num, den);
  *this = Rational(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
  return *this;
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("rational division by zero");
  return *this *= Rational(r.den, r.num);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

double RootTwo::to_double() { return static_cast<const RootTwo*>(this)->to_double(); }

double RootTwo::to_double() const {
  constexpr double kSqrt2 = 1.4142135623730950488016887242097;
  return a.to_double() + b.to_double() * kSqrt2;
}

std::string RootTwo::str() const {
  if (b.is_zero()) return a.str();
  std::string s;
  if (!a.is_zero()) s = a.str() + (b.sign() > 0 ? "+" : "");
  if (b == Rational(1))
    s += "sqrt2";
  else if (b == Rational(-1))
    s += "-sqrt2";
  else
    s += b.str() + "*sqrt2";
  return s;
}

RootTwo& RootTwo::operator+=(const RootTwo& r) {
  a += r.a;
  b += r.b;
  return *this;
}

RootTwo& RootTwo::operator-=(const RootTwo& r) {
  a -= r.a;
  b -= r.b;
  return *this;
}

RootTwo& RootTwo::operator*=(const RootTwo& r) {
  // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,   s = sqrt2
  const Rational na = a * r.a + Rational(2) * b * r.b;
  const Rational nb = a * r.b + b * r.a;
  a = na;
  b = nb;
  return *this;
}

RootTwo& RootTwo::operator/=(const RootTwo& r) {
  if (r.is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
  // 1/(c + d s) = (c - d s)/(c^2 - 2 d^2); the norm is nonzero since
  // sqrt2 is irrational.
  const Rational norm = r.a * r.a - Rational(2) * r.b * r.b;
  RootTwo conj(r.a / norm, -r.b / norm);
  return *this *= conj;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    skip_ws();
    size_t j = i, k = 0;
    while (w[k] && j < s.size() && s[j] == w[k]) ++j, ++k;
    if (w[k]) return false;
    i = j;
    return true;
  }
  bool peek_digit() {
    skip_ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  std::int64_t integer() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected digits in '" + s + "'");
    std::int64_t v = std::strtoll(s.substr(i, j - i).c_str(), nullptr, 10);
    i = j;
    return v;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

// term := [int [/int]] [*] [sqrt2 [/int]]   (at least one of the parts present)
RootTwo parse_term(Cursor& c, int sign) {
  Rational coef(1);
  bool have_number = false;
  if (c.peek_digit()) {
    std::int64_t n = c.integer();
    std::int64_t d = 1;
    if (c.eat('/')) d = c.integer();
    coef = Rational(n, d);
    have_number = true;
  }
  c.eat('*');
  bool have_root = c.eat_word("sqrt2") || c.eat_word("r2");
  if (have_root && c.eat('/')) coef /= Rational(c.integer());
  if (!have_number && !have_root)
    throw std::invalid_argument("malformed scalar literal");
  if (sign < 0) coef = -coef;
  return have_root ? RootTwo(Rational(0), coef) : RootTwo(coef);
}

}  // namespace

RootTwo parse_root_two(const std::string& text) {
  Cursor c{text};
  int sign = c.eat('-') ? -1 : (c.eat('+'), 1);
  RootTwo v = parse_term(c, sign);
  while (!c.done()) {
    if (c.eat('+'))
      v += parse_term(c, 1);
    else if (c.eat('-'))
      v += parse_term(c, -1);
    else
      throw std::invalid_argument("trailing characters in '" + text + "'");
  }
  return v;
}

Rational parse_rational(const std::string& text) {
  RootTwo v = parse_root_two(text);
  if (!v.is_rational())
    throw std::invalid_argument("expected a rational, got '" + text + "'");
  return v.a;
}

}  // namespace pleb
