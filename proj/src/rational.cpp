#include "torifan/rational.hpp"

#include <charconv>
#include <numeric>

namespace torifan {

Rational::Rational(i64 n, i64 d) {
  if (d == 0) fail(Err::ZeroDenominator, "rational with denominator zero");
  if (d < 0) { n = neg_i(n); d = neg_i(d); }
  i64 g = std::gcd(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

namespace {

bool parse_i64(const char* first, const char* last, i64& out) {
  if (first == last) return false;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto slash = s.find('/');
  i64 n = 0, d = 1;
  if (slash == std::string::npos) {
    if (!parse_i64(b, e, n)) fail(Err::ParseError, "not a rational: '" + s + "'");
  } else {
    if (!parse_i64(b, b + slash, n) || !parse_i64(b + slash + 1, e, d))
      fail(Err::ParseError, "not a rational: '" + s + "'");
  }
  if (d == 0) fail(Err::ZeroDenominator, "rational with denominator zero: '" + s + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::frac() const { return *this - Rational(floor(), 1); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(add_i(mul_i(a.num, b.den), mul_i(b.num, a.den)), mul_i(a.den, b.den));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(sub_i(mul_i(a.num, b.den), mul_i(b.num, a.den)), mul_i(a.den, b.den));
}

bool operator<(const Rational& a, const Rational& b) {
  return mul_i(a.num, b.den) < mul_i(b.num, a.den);
}

Rational mediant(const Rational& a, const Rational& b) {
  return Rational(add_i(a.num, b.num), add_i(a.den, b.den));
}

}  // namespace torifan
