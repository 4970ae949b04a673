#pragma once

#include <array>
#include <compare>
#include <vector>

#include "torifan/fan2d.hpp"
#include "torifan/lattice.hpp"
#include "torifan/rational.hpp"

namespace torifan {

// The one color in play; its image in the lattice is fixed to (1, 0).
inline constexpr Vec2 kColorPoint{1, 0};

// A cone of dimension 0, 1 or 2 with a color flag.  Two-dimensional cones are
// stored counterclockwise (det2(a, b) > 0), generators primitive.  A colored
// cone must contain kColorPoint among its nonzero lattice points.
struct ColoredCone {
  int dim = 0;
  Vec2 a{0, 0};  // dim >= 1
  Vec2 b{0, 0};  // dim == 2 only
  bool colored = false;

  static ColoredCone zero();
  static ColoredCone ray(const Vec2& v, bool colored);
  // Normalizes the pair to counterclockwise order.
  static ColoredCone span(const Vec2& u, const Vec2& v, bool colored);

  bool contains(const Vec2& p) const;

  friend bool operator==(const ColoredCone&, const ColoredCone&) = default;
  friend auto operator<=>(const ColoredCone&, const ColoredCone&) = default;
};

// Fan of colored cones (single-color case).  Stores the full face-closed cone
// set: the constructor validates each cone, completes missing faces (colors
// induced by membership of kColorPoint), and verifies that any two cones meet
// in a common face carrying the intersected colors.
class ColoredFan2 {
 public:
  explicit ColoredFan2(std::vector<ColoredCone> cones);

  const std::vector<ColoredCone>& cones() const { return cones_; }

  // The 2D cones chain counterclockwise all the way around the origin.
  bool is_complete() const;

  // Every 2D cone unimodular and every colored cone has kColorPoint among
  // its generators.
  bool is_smooth() const;

  ColoredFan2 uncolored() const;

  // Blow-up in the target cone, which must be an element of the fan:
  // a colored 2D cone splits at (other generator) + kColorPoint with only the
  // kColorPoint-side child keeping the color; an uncolored 2D cone splits at
  // the mediant of its generators with both children uncolored; a colored ray
  // discards all colors.  Anything else is TypeMismatch.
  ColoredFan2 blow_up(const ColoredCone& target) const;

  // No contractible configuration: every ray equal to the sum of its cyclic
  // neighbors carries the color.  Requires complete (NotComplete) and smooth
  // (NotSmooth).
  bool is_minimal() const;

  // Rays in counterclockwise cyclic order; requires a complete fan.
  std::vector<Vec2> ray_cycle() const;
  bool ray_colored(const Vec2& v) const;

  friend bool operator==(const ColoredFan2&, const ColoredFan2&) = default;

 private:
  std::vector<ColoredCone> cones_;  // sorted; face-closed
};

// Colors every cone containing kColorPoint (inverse of the color-discarding
// blow-up on fans whose rays include kColorPoint).
ColoredFan2 attach_color(const ColoredFan2& f);

// Minimal colored model of the one-exceptional surface with invariant r:
// build the blow-up fan, move its exceptional ray onto kColorPoint by a
// lattice automorphism, and color every cone containing that ray.
ColoredFan2 colored_fan(const Rational& r);

// Fan in a rank-3 lattice given by rays and maximal simplicial cones (index
// triples, stored positively oriented with the smallest index first).
struct Fan3 {
  std::vector<Vec3> rays;
  std::vector<std::array<int, 3>> max_cones;

  friend bool operator==(const Fan3&, const Fan3&) = default;
};

bool is_smooth(const Fan3& f);

// Facet pairing (every 2-ray face lies in exactly two maximal cones),
// connectivity, and the Euler count V - E + F == 2 of the induced sphere
// triangulation; together these exclude gaps and multiple covers.
bool is_complete(const Fan3& f);

// Total space of the fibration over the base of a one-exceptional fan:
// the fan's rays embed into the plane z = 0 on the basis given by the two
// neighbors of the exceptional ray, and two apex rays (0,0,1) and (1,1,-1)
// cone over every 2D cone.  The exceptional ray lands on (1,1,0).
Fan3 build_fibration_fan(const CompleteFan2& f2);

// Contracts the exceptional ray (1,1,0) fiberwise: its four cones merge in
// pairs sharing an apex, keeping a fibration structure.
Fan3 contract_fiberwise(const Fan3& f3);

// Contracts the exceptional ray (1,1,0) across the apexes (it is the sum of
// (0,0,1) and (1,1,-1)): the result is minimal but no longer fibers.
Fan3 contract_transverse(const Fan3& f3);

// The minimal model for parameters p > 1, q >= 1, gcd(p, q) == 1: transverse
// contraction of the fibration fan over the surface with invariant (p+q)/p.
Fan3 house_model(i64 p, i64 q);

}  // namespace torifan
