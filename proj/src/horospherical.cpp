#include "torifan/horospherical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "torifan/classify.hpp"

namespace torifan {

ColoredCone ColoredCone::zero() { return ColoredCone{}; }

ColoredCone ColoredCone::ray(const Vec2& v, bool colored) {
  ColoredCone c;
  c.dim = 1;
  c.a = primitive(v);
  c.colored = colored;
  if (colored && !c.contains(kColorPoint))
    fail(Err::InvalidFan, "colored ray does not contain the color point");
  return c;
}

ColoredCone ColoredCone::span(const Vec2& u, const Vec2& v, bool colored) {
  ColoredCone c;
  c.dim = 2;
  c.a = primitive(u);
  c.b = primitive(v);
  i64 d = det2(c.a, c.b);
  if (d == 0) fail(Err::NotStrictlyConvex, "cone generators are parallel");
  if (d < 0) std::swap(c.a, c.b);
  c.colored = colored;
  if (colored && !c.contains(kColorPoint))
    fail(Err::InvalidFan, "colored cone does not contain the color point");
  return c;
}

bool ColoredCone::contains(const Vec2& p) const {
  switch (dim) {
    case 0: return p == Vec2{0, 0};
    case 1: return det2(a, p) == 0 && dot2(a, p) >= 0;
    default: return det2(a, p) >= 0 && det2(p, b) >= 0;
  }
}

namespace {

bool induced_color(const ColoredCone& parent, const ColoredCone& face) {
  return parent.colored && face.dim >= 1 && face.contains(kColorPoint);
}

std::vector<ColoredCone> proper_faces(const ColoredCone& c) {
  std::vector<ColoredCone> out;
  if (c.dim == 2) {
    out.push_back(ColoredCone::ray(c.a, induced_color(c, ColoredCone::ray(c.a, false))));
    out.push_back(ColoredCone::ray(c.b, induced_color(c, ColoredCone::ray(c.b, false))));
  }
  if (c.dim >= 1) out.push_back(ColoredCone::zero());
  return out;
}

// Geometric intersection of two valid cones (angle < pi each); the color of
// the result is the caller's business.
ColoredCone intersect_cones(const ColoredCone& c1, const ColoredCone& c2) {
  if (c1.dim == 0 || c2.dim == 0) return ColoredCone::zero();
  if (c1.dim == 1 && c2.dim == 1)
    return c1.a == c2.a ? ColoredCone::ray(c1.a, false) : ColoredCone::zero();
  if (c1.dim == 1) return c2.contains(c1.a) ? ColoredCone::ray(c1.a, false) : ColoredCone::zero();
  if (c2.dim == 1) return c1.contains(c2.a) ? ColoredCone::ray(c2.a, false) : ColoredCone::zero();

  std::vector<Vec2> cand;
  for (const Vec2& v : {c1.a, c1.b, c2.a, c2.b})
    if (c1.contains(v) && c2.contains(v) &&
        std::find(cand.begin(), cand.end(), v) == cand.end())
      cand.push_back(v);
  if (cand.empty()) return ColoredCone::zero();
  for (const Vec2& u : cand)
    for (const Vec2& w : cand) {
      if (det2(u, w) <= 0) continue;
      bool hull = true;
      for (const Vec2& t : cand)
        if (det2(u, t) < 0 || det2(t, w) < 0) { hull = false; break; }
      if (hull) return ColoredCone::span(u, w, false);
    }
  // all candidates collinear
  for (const Vec2& u : cand)
    for (const Vec2& w : cand)
      if (det2(u, w) != 0)
        fail(Err::InternalContradiction, "cone intersection is not a cone");
  return ColoredCone::ray(cand.front(), false);
}

// f is a face of parent (possibly parent itself) and carries exactly the
// color induced from parent.
bool is_face_with_color(const ColoredCone& f, const ColoredCone& parent) {
  bool geometric = false;
  if (f.dim == 0) geometric = true;
  else if (f.dim == parent.dim)
    geometric = (f.a == parent.a && (f.dim < 2 || f.b == parent.b));
  else if (f.dim == 1 && parent.dim == 2)
    geometric = (f.a == parent.a || f.a == parent.b);
  if (!geometric) return false;
  return f.colored == induced_color(parent, f);
}

ColoredCone validated(ColoredCone c) {
  switch (c.dim) {
    case 0:
      if (c.colored) fail(Err::InvalidFan, "the zero cone cannot be colored");
      return ColoredCone::zero();
    case 1: return ColoredCone::ray(c.a, c.colored);
    case 2: return ColoredCone::span(c.a, c.b, c.colored);
    default: fail(Err::InvalidFan, "cone dimension must be 0, 1 or 2");
  }
}

bool angular_less(const Vec2& u, const Vec2& v) {
  auto half = [](const Vec2& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  if (half(u) != half(v)) return half(u) < half(v);
  return det2(u, v) > 0;
}

}  // namespace

ColoredFan2::ColoredFan2(std::vector<ColoredCone> cones) {
  std::set<ColoredCone> all;
  for (ColoredCone& c : cones) {
    ColoredCone v = validated(std::move(c));
    for (const ColoredCone& f : proper_faces(v)) all.insert(f);
    all.insert(std::move(v));
  }
  all.insert(ColoredCone::zero());

  // geometry may not occur twice (in particular not with conflicting colors)
  std::set<std::tuple<int, Vec2, Vec2>> shapes;
  for (const ColoredCone& c : all)
    if (!shapes.insert({c.dim, c.a, c.b}).second)
      fail(Err::InvalidFan, "the same cone occurs with conflicting colors");

  cones_.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      ColoredCone inter = intersect_cones(cones_[i], cones_[j]);
      inter.colored = cones_[i].colored && cones_[j].colored && inter.dim >= 1 &&
                      inter.contains(kColorPoint);
      if (!is_face_with_color(inter, cones_[i]) || !is_face_with_color(inter, cones_[j]))
        fail(Err::InvalidFan, "two cones do not meet in a common colored face");
    }
}

bool ColoredFan2::is_complete() const {
  std::vector<ColoredCone> two;
  for (const ColoredCone& c : cones_)
    if (c.dim == 2) two.push_back(c);
  if (two.empty()) return false;
  std::sort(two.begin(), two.end(),
            [](const ColoredCone& x, const ColoredCone& y) { return angular_less(x.a, y.a); });
  int winding = 0;
  for (std::size_t i = 0; i < two.size(); ++i) {
    if (two[i].b != two[(i + 1) % two.size()].a) return false;
    winding += ccw_arc_passes_e1(two[i].a, two[i].b) ? 1 : 0;
  }
  return winding == 1;
}

bool ColoredFan2::is_smooth() const {
  for (const ColoredCone& c : cones_) {
    if (c.dim == 2 && det2(c.a, c.b) != 1) return false;
    if (c.colored) {
      bool generator = (c.a == kColorPoint) || (c.dim == 2 && c.b == kColorPoint);
      if (!generator) return false;
    }
  }
  return true;
}

ColoredFan2 ColoredFan2::uncolored() const {
  std::vector<ColoredCone> cs = cones_;
  for (ColoredCone& c : cs) c.colored = false;
  return ColoredFan2(std::move(cs));
}

namespace {

// Cones of the set that are not proper faces of another element.
std::vector<ColoredCone> maximal_of(const std::vector<ColoredCone>& cones) {
  std::vector<ColoredCone> out;
  for (const ColoredCone& c : cones) {
    bool face_of_other = false;
    for (const ColoredCone& d : cones) {
      if (d.dim <= c.dim) continue;
      for (const ColoredCone& f : proper_faces(d))
        if (f.dim == c.dim && f.a == c.a && f.b == c.b) { face_of_other = true; break; }
      if (face_of_other) break;
    }
    if (!face_of_other) out.push_back(c);
  }
  return out;
}

}  // namespace

ColoredFan2 ColoredFan2::blow_up(const ColoredCone& target) const {
  ColoredCone t = validated(target);
  if (std::find(cones_.begin(), cones_.end(), t) == cones_.end())
    fail(Err::InvalidTarget, "target cone is not an element of the fan");
  if (t.dim == 0 || (t.dim == 1 && !t.colored))
    fail(Err::TypeMismatch, "no blow-up is defined in this cone");
  if (t.dim == 1) return uncolored();  // discarding the color

  std::vector<ColoredCone> next = maximal_of(cones_);
  next.erase(std::remove(next.begin(), next.end(), t), next.end());
  if (t.colored) {
    Vec2 vp, vo;
    if (t.a == kColorPoint) { vp = t.a; vo = t.b; }
    else if (t.b == kColorPoint) { vp = t.b; vo = t.a; }
    else fail(Err::TypeMismatch, "color point is not a generator of the target cone");
    Vec2 vnew = vo + vp;
    next.push_back(ColoredCone::span(vo, vnew, false));
    next.push_back(ColoredCone::span(vnew, vp, true));
  } else {
    Vec2 vnew = t.a + t.b;
    next.push_back(ColoredCone::span(t.a, vnew, false));
    next.push_back(ColoredCone::span(vnew, t.b, false));
  }
  return ColoredFan2(std::move(next));
}

std::vector<Vec2> ColoredFan2::ray_cycle() const {
  if (!is_complete()) fail(Err::NotComplete, "ray cycle needs a complete fan");
  std::vector<ColoredCone> two;
  for (const ColoredCone& c : cones_)
    if (c.dim == 2) two.push_back(c);
  std::sort(two.begin(), two.end(),
            [](const ColoredCone& x, const ColoredCone& y) { return angular_less(x.a, y.a); });
  std::vector<Vec2> cycle;
  cycle.reserve(two.size());
  for (const ColoredCone& c : two) cycle.push_back(c.a);
  return cycle;
}

bool ColoredFan2::ray_colored(const Vec2& v) const {
  for (const ColoredCone& c : cones_)
    if (c.dim == 1 && c.a == v) return c.colored;
  return false;
}

bool ColoredFan2::is_minimal() const {
  if (!is_complete()) fail(Err::NotComplete, "minimality needs a complete fan");
  if (!is_smooth()) fail(Err::NotSmooth, "minimality needs a smooth fan");
  std::vector<Vec2> cycle = ray_cycle();
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = cycle[(i + n - 1) % n];
    const Vec2& next = cycle[(i + 1) % n];
    if (prev + next == cycle[i] && !ray_colored(cycle[i])) return false;
  }
  return true;
}

ColoredFan2 attach_color(const ColoredFan2& f) {
  std::vector<ColoredCone> cs = f.cones();
  for (ColoredCone& c : cs)
    if (c.dim >= 1 && c.contains(kColorPoint)) c.colored = true;
  return ColoredFan2(std::move(cs));
}

ColoredFan2 colored_fan(const Rational& r) {
  CompleteFan2 base = build_fan(r);
  std::size_t e = unique_exceptional_ray(base);
  Vec2 exc = base.ray(e);
  Egcd eg = egcd(exc.x, exc.y);
  Mat2 m{eg.s, eg.t, neg_i(exc.y), exc.x};  // det = s*x + t*y = 1; maps exc to (1,0)
  CompleteFan2 moved(unimodular_apply(m, base.rays()));

  const std::size_t n = moved.size();
  std::vector<ColoredCone> cones;
  cones.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    bool colored = moved.ray(i) == kColorPoint || moved.ray(i + 1) == kColorPoint;
    cones.push_back(ColoredCone::span(moved.ray(i), moved.ray(i + 1), colored));
  }
  cones.push_back(ColoredCone::ray(kColorPoint, true));
  return ColoredFan2(std::move(cones));
}

// ---------------------------------------------------------------------------
// rank-3 fans

namespace {

std::array<int, 3> canonical_cone(const std::vector<Vec3>& rays, int i, int j, int k) {
  if (det3(rays[static_cast<std::size_t>(i)], rays[static_cast<std::size_t>(j)],
           rays[static_cast<std::size_t>(k)]) < 0)
    std::swap(j, k);
  if (det3(rays[static_cast<std::size_t>(i)], rays[static_cast<std::size_t>(j)],
           rays[static_cast<std::size_t>(k)]) <= 0)
    fail(Err::InvalidFan, "degenerate maximal cone");
  while (!(i < j && i < k)) {  // rotate (even permutations keep orientation)
    int t = i; i = j; j = k; k = t;
  }
  return {i, j, k};
}

i64 cone_det(const Fan3& f, const std::array<int, 3>& c) {
  return det3(f.rays[static_cast<std::size_t>(c[0])], f.rays[static_cast<std::size_t>(c[1])],
              f.rays[static_cast<std::size_t>(c[2])]);
}

}  // namespace

bool is_smooth(const Fan3& f) {
  for (const auto& c : f.max_cones) {
    i64 d = cone_det(f, c);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_complete(const Fan3& f) {
  if (f.max_cones.empty()) return false;
  std::map<std::pair<int, int>, int> facet_count;
  for (const auto& c : f.max_cones)
    for (int s = 0; s < 3; ++s) {
      int u = c[static_cast<std::size_t>(s)];
      int v = c[static_cast<std::size_t>((s + 1) % 3)];
      facet_count[{std::min(u, v), std::max(u, v)}] += 1;
    }
  for (const auto& [facet, count] : facet_count)
    if (count != 2) return false;

  // connectivity over shared facets
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_facet;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const auto& c = f.max_cones[ci];
    for (int s = 0; s < 3; ++s) {
      int u = c[static_cast<std::size_t>(s)];
      int v = c[static_cast<std::size_t>((s + 1) % 3)];
      by_facet[{std::min(u, v), std::max(u, v)}].push_back(ci);
    }
  }
  std::vector<char> seen(f.max_cones.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t ci = stack.back();
    stack.pop_back();
    const auto& c = f.max_cones[ci];
    for (int s = 0; s < 3; ++s) {
      int u = c[static_cast<std::size_t>(s)];
      int v = c[static_cast<std::size_t>((s + 1) % 3)];
      for (std::size_t other : by_facet[{std::min(u, v), std::max(u, v)}])
        if (!seen[other]) { seen[other] = 1; stack.push_back(other); }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;

  // Euler characteristic of the boundary complex: rules out double covers
  std::set<int> used;
  for (const auto& c : f.max_cones) used.insert(c.begin(), c.end());
  if (used.size() != f.rays.size()) return false;  // dangling ray
  i64 V = static_cast<i64>(used.size());
  i64 E = static_cast<i64>(facet_count.size());
  i64 F = static_cast<i64>(f.max_cones.size());
  return V - E + F == 2;
}

Fan3 build_fibration_fan(const CompleteFan2& f2) {
  const std::size_t n = f2.size();
  std::size_t e = unique_exceptional_ray(f2);
  Vec2 v2 = f2.ray(e + 1);
  Vec2 vn = f2.ray(e + n - 1);
  if (!(v2 + vn == f2.ray(e)))
    fail(Err::InternalContradiction, "exceptional ray is not the sum of its neighbors");

  Fan3 out;
  out.rays.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& v = f2.ray(i);
    // coordinates of v in the basis (v2, vn); det2(v2, vn) == -1
    out.rays.push_back({det2(vn, v), det2(v, v2), 0});
  }
  const int ap1 = static_cast<int>(n);      // (0,0,1)
  const int ap2 = static_cast<int>(n) + 1;  // (1,1,-1)
  out.rays.push_back({0, 0, 1});
  out.rays.push_back({1, 1, -1});
  for (std::size_t i = 0; i < n; ++i) {
    int a = static_cast<int>(i);
    int b = static_cast<int>((i + 1) % n);
    out.max_cones.push_back(canonical_cone(out.rays, ap1, a, b));
    out.max_cones.push_back(canonical_cone(out.rays, ap2, a, b));
  }
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

namespace {

struct FibrationIndices {
  int exc, base_a, base_b, apex1, apex2;
};

int index_of(const Fan3& f, const Vec3& v) {
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (f.rays[i] == v) return static_cast<int>(i);
  return -1;
}

FibrationIndices locate_fibration(const Fan3& f) {
  FibrationIndices ix{index_of(f, {1, 1, 0}), index_of(f, {1, 0, 0}), index_of(f, {0, 1, 0}),
                      index_of(f, {0, 0, 1}), index_of(f, {1, 1, -1})};
  if (ix.exc < 0 || ix.base_a < 0 || ix.base_b < 0 || ix.apex1 < 0 || ix.apex2 < 0)
    fail(Err::MissingStructure, "fan lacks the fibration frame rays");
  return ix;
}

Fan3 contract_ray3(const Fan3& f, int removed,
                   const std::vector<std::array<int, 3>>& replacements) {
  Fan3 out;
  std::vector<int> remap(f.rays.size(), -1);
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    if (static_cast<int>(i) == removed) continue;
    remap[i] = static_cast<int>(out.rays.size());
    out.rays.push_back(f.rays[i]);
  }
  auto push = [&](std::array<int, 3> c) {
    out.max_cones.push_back(
        canonical_cone(out.rays, remap[static_cast<std::size_t>(c[0])],
                       remap[static_cast<std::size_t>(c[1])],
                       remap[static_cast<std::size_t>(c[2])]));
  };
  for (const auto& c : f.max_cones)
    if (std::find(c.begin(), c.end(), removed) == c.end()) push(c);
  for (const auto& c : replacements) push(c);
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

// The four maximal cones through the exceptional ray, verified to be exactly
// {apex, exc, neighbor} for both apexes and both base neighbors.
void check_exceptional_star(const Fan3& f, const FibrationIndices& ix) {
  std::set<std::set<int>> expected{{ix.apex1, ix.exc, ix.base_a},
                                   {ix.apex1, ix.exc, ix.base_b},
                                   {ix.apex2, ix.exc, ix.base_a},
                                   {ix.apex2, ix.exc, ix.base_b}};
  std::set<std::set<int>> found;
  for (const auto& c : f.max_cones)
    if (std::find(c.begin(), c.end(), ix.exc) != c.end())
      found.insert(std::set<int>(c.begin(), c.end()));
  if (found != expected)
    fail(Err::MissingStructure, "exceptional ray is not in the expected four cones");
}

}  // namespace

Fan3 contract_fiberwise(const Fan3& f3) {
  FibrationIndices ix = locate_fibration(f3);
  check_exceptional_star(f3, ix);
  // (1,1,0) = (1,0,0) + (0,1,0): the removed ray is interior to the merged
  // base face, so both unions are simplicial cones again
  return contract_ray3(f3, ix.exc,
                       {{ix.apex1, ix.base_a, ix.base_b}, {ix.apex2, ix.base_a, ix.base_b}});
}

Fan3 contract_transverse(const Fan3& f3) {
  FibrationIndices ix = locate_fibration(f3);
  check_exceptional_star(f3, ix);
  // (1,1,0) = (0,0,1) + (1,1,-1): merging across the apexes
  return contract_ray3(f3, ix.exc,
                       {{ix.apex1, ix.apex2, ix.base_a}, {ix.apex1, ix.apex2, ix.base_b}});
}

Fan3 house_model(i64 p, i64 q) {
  if (p < 1 || q < 1) fail(Err::OutOfRange, "need p, q >= 1");
  if (std::gcd(p, q) != 1) fail(Err::NotCoprime, "p and q must be coprime");
  if (p == 1) fail(Err::PEqualsOne, "p must exceed 1");
  return contract_transverse(build_fibration_fan(build_fan(Rational(add_i(p, q), p))));
}

}  // namespace torifan
