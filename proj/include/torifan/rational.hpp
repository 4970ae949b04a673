#pragma once

#include <string>

#include "torifan/checked.hpp"

namespace torifan {

// Reduced fraction with positive denominator, so defaulted equality is exact
// value equality.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d);  // reduces; ZeroDenominator on d == 0

  static Rational parse(const std::string& s);  // "7/2" or "3"; ParseError

  std::string str() const;
  bool is_integer() const { return den == 1; }
  i64 floor() const { return floor_div(num, den); }
  Rational frac() const;  // *this - floor(), in [0,1)

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

// Farey mediant (num_a+num_b)/(den_a+den_b).  For Stern-Brocot neighbors the
// result is automatically reduced; the constructor reduces in general anyway.
Rational mediant(const Rational& a, const Rational& b);

}  // namespace torifan
