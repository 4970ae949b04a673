#include "torifan/hull_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace torifan {

namespace {

i64 cross(const Vec2& o, const Vec2& p, const Vec2& q) { return det2(p - o, q - o); }

// Andrew's monotone chain; counterclockwise vertex cycle, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::vector<Vec2> hull_boundary_points(const Cone2& c) {
  const i64 d = det2(c.gen_a, c.gen_b);
  if (d <= 0) fail(Err::WrongOrientation, "oracle expects det2(gen_a, gen_b) > 0");

  // The compact hull face lies inside the triangle (0, gen_a, gen_b): scan
  // its bounding box for cone points.
  i64 xlo = std::min({i64{0}, c.gen_a.x, c.gen_b.x});
  i64 xhi = std::max({i64{0}, c.gen_a.x, c.gen_b.x});
  i64 ylo = std::min({i64{0}, c.gen_a.y, c.gen_b.y});
  i64 yhi = std::max({i64{0}, c.gen_a.y, c.gen_b.y});
  std::vector<Vec2> pts;
  for (i64 x = xlo; x <= xhi; ++x)
    for (i64 y = ylo; y <= yhi; ++y) {
      Vec2 p{x, y};
      if (p == Vec2{0, 0}) continue;
      if (det2(c.gen_a, p) >= 0 && det2(p, c.gen_b) >= 0) pts.push_back(p);
    }

  // Far sentinels stand in for the two unbounded ray directions, making the
  // compact face a chain of the finite hull.
  i64 m = 4 * (std::max({xhi, -xlo, yhi, -ylo}) + 1);
  Vec2 sa = m * c.gen_a;
  Vec2 sb = m * c.gen_b;
  pts.push_back(sa);
  pts.push_back(sb);
  std::vector<Vec2> hull = convex_hull(std::move(pts));

  const std::size_t h = hull.size();
  std::size_t ia = h, ib = h;
  for (std::size_t i = 0; i < h; ++i) {
    if (hull[i] == sa) ia = i;
    if (hull[i] == sb) ib = i;
  }
  if (ia == h || ib == h)
    fail(Err::InternalContradiction, "oracle sentinels fell inside the hull");

  // The counterclockwise arc from the gen_b sentinel to the gen_a sentinel is
  // the side facing the origin; its interior vertices run from gen_b to gen_a.
  std::vector<Vec2> chain;
  for (std::size_t i = (ib + 1) % h; i != ia; i = (i + 1) % h) chain.push_back(hull[i]);
  std::reverse(chain.begin(), chain.end());
  if (chain.empty() || chain.front() != c.gen_a || chain.back() != c.gen_b)
    fail(Err::InternalContradiction, "oracle chain does not join the generators");

  // fill in lattice points interior to hull edges
  std::vector<Vec2> out;
  out.push_back(chain.front());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Vec2 delta = chain[i + 1] - chain[i];
    i64 g = std::gcd(delta.x, delta.y);
    Vec2 step{delta.x / g, delta.y / g};
    for (i64 t = 1; t <= g; ++t) out.push_back(chain[i] + t * step);
  }
  return out;
}

}  // namespace torifan
