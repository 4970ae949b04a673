#pragma once

#include <cstdint>

#include "torifan/errors.hpp"

namespace torifan {

using i64 = std::int64_t;

// Overflow-checked arithmetic.  Coordinates stay tiny in normal use, but
// realize() on adversarial weight lists grows geometrically, and a silent
// wraparound would corrupt exact sign predicates.  Everything multiplies and
// adds through these.
inline i64 add_i(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer addition overflowed");
  return r;
}

inline i64 sub_i(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer subtraction overflowed");
  return r;
}

inline i64 mul_i(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer multiplication overflowed");
  return r;
}

inline i64 neg_i(i64 a) { return sub_i(0, a); }

// Floor/ceil division with a positive divisor (exact rounding for negatives).
inline i64 floor_div(i64 a, i64 b) {
  if (b <= 0) fail(Err::InternalContradiction, "floor_div needs a positive divisor");
  i64 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) {
  if (b <= 0) fail(Err::InternalContradiction, "ceil_div needs a positive divisor");
  i64 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Extended gcd: g = gcd(a, b) >= 0 with s*a + t*b = g.
struct Egcd {
  i64 g, s, t;
};

inline Egcd egcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp;
    tmp = sub_i(old_r, mul_i(q, r)); old_r = r; r = tmp;
    tmp = sub_i(old_s, mul_i(q, s)); old_s = s; s = tmp;
    tmp = sub_i(old_t, mul_i(q, t)); old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = neg_i(old_r); old_s = neg_i(old_s); old_t = neg_i(old_t); }
  return {old_r, old_s, old_t};
}

}  // namespace torifan
