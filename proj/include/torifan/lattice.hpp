#pragma once

#include <compare>
#include <vector>

#include "torifan/checked.hpp"

namespace torifan {

// Point of the rank-2 lattice.  Rays of fans are primitive Vec2s.
struct Vec2 {
  i64 x = 0;
  i64 y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {add_i(u.x, v.x), add_i(u.y, v.y)}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {sub_i(u.x, v.x), sub_i(u.y, v.y)}; }
inline Vec2 operator-(const Vec2& v) { return {neg_i(v.x), neg_i(v.y)}; }
inline Vec2 operator*(i64 k, const Vec2& v) { return {mul_i(k, v.x), mul_i(k, v.y)}; }

// Signed area form: positive iff v lies counterclockwise of u, within a half
// turn.  Every orientation/membership predicate in the project reduces to its
// sign, so it must stay exact (see checked.hpp).
inline i64 det2(const Vec2& u, const Vec2& v) { return sub_i(mul_i(u.x, v.y), mul_i(u.y, v.x)); }

inline i64 dot2(const Vec2& u, const Vec2& v) { return add_i(mul_i(u.x, v.x), mul_i(u.y, v.y)); }

bool is_primitive(const Vec2& v);
Vec2 primitive(const Vec2& v);  // ZeroVector on (0,0)

struct Vec3 {
  i64 x = 0;
  i64 y = 0;
  i64 z = 0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend auto operator<=>(const Vec3&, const Vec3&) = default;
};

i64 det3(const Vec3& u, const Vec3& v, const Vec3& w);
Vec3 primitive3(const Vec3& v);

// Strictly convex rational cone spanned by two rays.  Generators are stored
// primitive (imprimitive input is normalized, which keeps the same cone).
// Orientation is the caller's business: resolve demands det2(gen_a, gen_b) > 0
// and reports WrongOrientation itself.
struct Cone2 {
  Vec2 gen_a;
  Vec2 gen_b;

  Cone2(const Vec2& a, const Vec2& b);

  friend bool operator==(const Cone2&, const Cone2&) = default;
};

// Order of the cyclic quotient group of the cone, |det2| of the generators.
// 1 means the pair is a lattice basis (smooth cone).
i64 singularity_order(const Cone2& c);

// Row-major 2x2 integer matrix acting on column vectors.
struct Mat2 {
  i64 m00 = 1, m01 = 0;
  i64 m10 = 0, m11 = 1;

  i64 det() const { return sub_i(mul_i(m00, m11), mul_i(m01, m10)); }
  Vec2 apply(const Vec2& v) const {
    return {add_i(mul_i(m00, v.x), mul_i(m01, v.y)), add_i(mul_i(m10, v.x), mul_i(m11, v.y))};
  }
};

// Applies a lattice automorphism (det = +-1) to a point list; NotUnimodular otherwise.
std::vector<Vec2> unimodular_apply(const Mat2& m, const std::vector<Vec2>& pts);

}  // namespace torifan
