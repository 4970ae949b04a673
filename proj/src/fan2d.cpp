#include "torifan/fan2d.hpp"

#include <algorithm>
#include <atomic>

namespace torifan {

namespace {
std::atomic<std::uint64_t> g_fan_constructions{0};
}

bool ccw_arc_passes_e1(const Vec2& u, const Vec2& v) {
  const Vec2 d{1, 0};
  if (det2(d, v) == 0 && dot2(d, v) > 0) return true;  // arc ends exactly on +x
  return det2(u, d) > 0 && det2(d, v) > 0;             // +x strictly inside
}

CompleteFan2::CompleteFan2(std::vector<Vec2> rays) : rays_(std::move(rays)) {
  const std::size_t n = rays_.size();
  if (n < 3) fail(Err::InvalidFan, "a complete fan needs at least 3 rays");
  for (const Vec2& r : rays_)
    if (!is_primitive(r)) fail(Err::InvalidFan, "ray is not primitive");

  i64 d01 = det2(rays_[0], rays_[1]);
  if (d01 == 0) fail(Err::InvalidFan, "consecutive rays are parallel");
  if (d01 < 0) std::reverse(rays_.begin(), rays_.end());

  for (std::size_t i = 0; i < n; ++i)
    if (det2(rays_[i], rays_[(i + 1) % n]) != 1)
      fail(Err::InvalidFan, "consecutive rays do not form a positive lattice basis");

  {
    std::vector<Vec2> sorted = rays_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Err::InvalidFan, "duplicate ray");
  }

  int winding = 0;
  for (std::size_t i = 0; i < n; ++i)
    winding += ccw_arc_passes_e1(rays_[i], rays_[(i + 1) % n]) ? 1 : 0;
  if (winding != 1) fail(Err::InvalidFan, "ray cycle winds " + std::to_string(winding) +
                                              " times around the origin");

  // For a once-winding det=+1 cycle this sum is forced, so a violation can
  // only mean the arithmetic above is broken, not that the input is bad.
  i64 sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    sum = add_i(sum, neg_i(det2(rays_[(i + n - 1) % n], rays_[(i + 1) % n])));
  if (sum != sub_i(12, mul_i(3, static_cast<i64>(n))))
    fail(Err::InternalContradiction, "fan weight sum violates 12 - 3n");

  g_fan_constructions.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t CompleteFan2::construction_count() {
  return g_fan_constructions.load(std::memory_order_relaxed);
}

bool same_fan(const CompleteFan2& f1, const CompleteFan2& f2) {
  if (f1.size() != f2.size()) return false;
  const std::size_t n = f1.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = f1.ray(i + s) == f2.ray(i);
    if (match) return true;
  }
  return false;
}

WeightedCircularGraph weights_of(const CompleteFan2& f) {
  const std::size_t n = f.size();
  std::vector<i64> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = neg_i(det2(f.ray(i + n - 1), f.ray(i + 1)));
    if (!(f.ray(i + n - 1) + f.ray(i + 1) + w[i] * f.ray(i) == Vec2{0, 0}))
      fail(Err::InternalContradiction, "three-term ray relation failed");
  }
  return WeightedCircularGraph(std::move(w));
}

CompleteFan2 realize(const WeightedCircularGraph& g, const Vec2& v0, const Vec2& v1) {
  if (det2(v0, v1) != 1) fail(Err::NotUnimodular, "seed rays must satisfy det2(v0, v1) == 1");
  const std::size_t n = g.size();
  std::vector<Vec2> rays{v0, v1};
  rays.reserve(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    rays.push_back(-(rays[i - 1] + g.weight(i) * rays[i]));
  // closure: the recursion must return to the seed pair
  Vec2 vn = -(rays[n - 2] + g.weight(n - 1) * rays[n - 1]);
  Vec2 vn1 = -(rays[n - 1] + g.weight(0) * vn);
  if (vn != v0 || vn1 != v1)
    fail(Err::NotRealizable, "weight recursion does not close up");
  try {
    return CompleteFan2(std::move(rays));
  } catch (const Error& e) {
    if (e.code() == Err::InvalidFan)
      fail(Err::NotRealizable, std::string("closed recursion is not a fan: ") + e.what());
    throw;
  }
}

CompleteFan2 star_subdivide(const CompleteFan2& f, std::size_t edge) {
  const std::size_t n = f.size();
  if (edge >= n) fail(Err::IndexOutOfRange, "edge index " + std::to_string(edge));
  std::vector<Vec2> rays = f.rays();
  rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(edge) + 1,
              f.ray(edge) + f.ray(edge + 1));
  return CompleteFan2(std::move(rays));
}

CompleteFan2 contract_ray(const CompleteFan2& f, std::size_t i) {
  const std::size_t n = f.size();
  if (i >= n) fail(Err::IndexOutOfRange, "ray index " + std::to_string(i));
  if (!(f.ray(i + n - 1) + f.ray(i + 1) == f.ray(i)))
    fail(Err::NotExceptional, "ray is not the sum of its neighbors");
  if (n == 3) fail(Err::TooSmall, "cannot contract a 3-ray fan");
  std::vector<Vec2> rays = f.rays();
  rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
  return CompleteFan2(std::move(rays));
}

bool is_unimodular_equivalent(const CompleteFan2& f1, const CompleteFan2& f2) {
  return is_isomorphic(weights_of(f1), weights_of(f2));
}

std::size_t unique_exceptional_ray(const CompleteFan2& f) {
  std::vector<std::size_t> exc = exceptional_vertices(weights_of(f));
  if (exc.size() != 1)
    fail(Err::NotOneExceptional,
         "fan has " + std::to_string(exc.size()) + " rays of weight -1");
  return exc[0];
}

}  // namespace torifan
