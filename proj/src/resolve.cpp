#include "torifan/resolve.hpp"

#include <numeric>

namespace torifan {

ResolutionData minimal_resolution(const Cone2& c) {
  const i64 d = det2(c.gen_a, c.gen_b);
  if (d < 0) fail(Err::WrongOrientation, "resolve expects det2(gen_a, gen_b) > 0");
  if (d == 0) fail(Err::NotStrictlyConvex, "degenerate cone");

  ResolutionData rd{c, {}, {}};
  if (d == 1) return rd;

  // First interior ray: among the lattice line {w : det2(gen_a, w) = 1},
  // slide by multiples of gen_a to the last point still inside the cone.
  // From there the boundary polygon of conv(cone cap Z^2 \ 0) continues by
  // the three-term rule next = -prev + t*cur with the least t that keeps
  // next on gen_b's side; t >= 2 always, and -t is exactly the weight the
  // ray will carry once the chain is inserted into a fan.
  Egcd eg = egcd(c.gen_a.x, c.gen_a.y);
  Vec2 w{neg_i(eg.t), eg.s};  // det2(gen_a, w) == s*ax + t*ay == 1
  i64 t0 = ceil_div(neg_i(det2(w, c.gen_b)), d);
  Vec2 cur = w + t0 * c.gen_a;
  Vec2 prev = c.gen_a;

  while (cur != c.gen_b) {
    i64 den = det2(cur, c.gen_b);
    if (den <= 0) fail(Err::InternalContradiction, "resolution walk left the cone");
    i64 t = ceil_div(det2(prev, c.gen_b), den);
    if (t < 2) fail(Err::InternalContradiction, "resolution step would be contractible");
    Vec2 next = t * cur - prev;
    rd.interior_rays.push_back(cur);
    rd.self_intersections.push_back(neg_i(t));
    prev = cur;
    cur = next;
    if (rd.interior_rays.size() > static_cast<std::size_t>(d))
      fail(Err::InternalContradiction, "resolution chain longer than the cone order");
  }
  return rd;
}

bool determinant_check(const ResolutionData& rd) {
  // Determinant of tridiagonal(a_1..a_k) by the three-term minor recurrence
  // D_i = a_i * D_{i-1} - D_{i-2}, D_{-1} = 0, D_0 = 1.
  i64 d_prev = 0;
  i64 d_cur = 1;
  for (i64 a : rd.self_intersections) {
    i64 next = sub_i(mul_i(a, d_cur), d_prev);
    d_prev = d_cur;
    d_cur = next;
  }
  i64 order = singularity_order(rd.cone);
  i64 expected = (rd.self_intersections.size() % 2 == 0) ? order : neg_i(order);
  return d_cur == expected;
}

std::array<Vec2, 3> wps_rays(i64 c, i64 b) {
  if (c < 1 || b <= c) fail(Err::OutOfRange, "need b > c >= 1");
  if (std::gcd(b, c) != 1) fail(Err::NotCoprime, "b and c must be coprime");
  return {Vec2{b, c}, Vec2{-1, 0}, Vec2{0, -1}};
}

CompleteFan2 resolve_wps(i64 c, i64 b) {
  if (c < 2) fail(Err::OutOfRange, "need b > c >= 2 (c == 1 is already regular)");
  std::array<Vec2, 3> w = wps_rays(c, b);
  // counterclockwise cycle (-1,0), (0,-1), (b,c); the cones at (b,c) are the
  // two singular ones
  ResolutionData below = minimal_resolution(Cone2(w[2], w[0]));  // (0,-1) -> (b,c)
  ResolutionData above = minimal_resolution(Cone2(w[0], w[1]));  // (b,c) -> (-1,0)
  std::vector<Vec2> rays;
  rays.push_back(w[1]);
  rays.push_back(w[2]);
  rays.insert(rays.end(), below.interior_rays.begin(), below.interior_rays.end());
  rays.push_back(w[0]);
  rays.insert(rays.end(), above.interior_rays.begin(), above.interior_rays.end());
  return CompleteFan2(std::move(rays));
}

}  // namespace torifan
