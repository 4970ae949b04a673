#include "torifan/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace torifan {

bool is_primitive(const Vec2& v) {
  if (v.x == 0 && v.y == 0) return false;
  return std::gcd(v.x, v.y) == 1;
}

Vec2 primitive(const Vec2& v) {
  if (v.x == 0 && v.y == 0) fail(Err::ZeroVector, "no primitive vector on the zero ray");
  i64 g = std::gcd(v.x, v.y);
  return {v.x / g, v.y / g};
}

i64 det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  i64 c0 = sub_i(mul_i(v.y, w.z), mul_i(v.z, w.y));
  i64 c1 = sub_i(mul_i(v.x, w.z), mul_i(v.z, w.x));
  i64 c2 = sub_i(mul_i(v.x, w.y), mul_i(v.y, w.x));
  return add_i(sub_i(mul_i(u.x, c0), mul_i(u.y, c1)), mul_i(u.z, c2));
}

Vec3 primitive3(const Vec3& v) {
  if (v.x == 0 && v.y == 0 && v.z == 0) fail(Err::ZeroVector, "no primitive vector on the zero ray");
  i64 g = std::gcd(std::gcd(v.x, v.y), v.z);
  return {v.x / g, v.y / g, v.z / g};
}

Cone2::Cone2(const Vec2& a, const Vec2& b) : gen_a(primitive(a)), gen_b(primitive(b)) {
  if (det2(gen_a, gen_b) == 0)
    fail(Err::NotStrictlyConvex, "cone generators are parallel");
}

i64 singularity_order(const Cone2& c) {
  i64 d = det2(c.gen_a, c.gen_b);
  return d < 0 ? neg_i(d) : d;
}

std::vector<Vec2> unimodular_apply(const Mat2& m, const std::vector<Vec2>& pts) {
  i64 d = m.det();
  if (d != 1 && d != -1) fail(Err::NotUnimodular, "matrix determinant is not +-1");
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const Vec2& p : pts) out.push_back(m.apply(p));
  return out;
}

}  // namespace torifan
