#pragma once

#include <cstdint>
#include <vector>

#include "torifan/circular_graph.hpp"
#include "torifan/lattice.hpp"

namespace torifan {

// True iff the counterclockwise arc from u to v passes the +x direction.
// Arcs are half-open (u excluded, v included) so that summing over a closed
// ray cycle counts each full revolution exactly once; callers guarantee
// det2(u, v) > 0, i.e. the arc is shorter than a half turn.
bool ccw_arc_passes_e1(const Vec2& u, const Vec2& v);

// Complete regular 2D fan: distinct primitive rays in counterclockwise cyclic
// order, consecutive pairs forming positively oriented lattice bases
// (det2 = +1), winding exactly once around the origin.  Clockwise input is
// re-oriented on construction.
class CompleteFan2 {
 public:
  explicit CompleteFan2(std::vector<Vec2> rays);

  std::size_t size() const { return rays_.size(); }
  const Vec2& ray(std::size_t i) const { return rays_[i % rays_.size()]; }
  const std::vector<Vec2>& rays() const { return rays_; }

  // Process-wide number of successful constructions.  The test suite uses it
  // to demonstrate the constructor's weight-sum audit ran on every fan built.
  static std::uint64_t construction_count();

  friend bool operator==(const CompleteFan2&, const CompleteFan2&) = default;

 private:
  std::vector<Vec2> rays_;
};

// Equality of fans as cyclic ray sequences (the stored starting ray is an
// artifact of construction order).
bool same_fan(const CompleteFan2& f1, const CompleteFan2& f2);

// Self-intersection weights: w_i = -det2(ray(i-1), ray(i+1)), the unique
// integers with ray(i-1) + ray(i+1) + w_i * ray(i) == 0.
WeightedCircularGraph weights_of(const CompleteFan2& f);

// Rebuilds the fan with the given weights from a seed basis ray(0) = v0,
// ray(1) = v1 (det2(v0, v1) must be +1) via the three-term recursion
// nu_{i+1} = -nu_{i-1} - w_i * nu_i.  NotRealizable if the recursion fails to
// close up into a valid fan.
CompleteFan2 realize(const WeightedCircularGraph& g, const Vec2& v0, const Vec2& v1);

// Inserts the sum of the two edge rays between them (the fan-level blow-up of
// the torus-fixed point of cone(ray(e), ray(e+1))).
CompleteFan2 star_subdivide(const CompleteFan2& f, std::size_t edge);

// Removes ray i; requires ray(i-1) + ray(i+1) == ray(i) (weight -1), the
// fan-level blow-down.
CompleteFan2 contract_ray(const CompleteFan2& f, std::size_t i);

// Same surface up to a lattice automorphism; decided on weight classes.
bool is_unimodular_equivalent(const CompleteFan2& f1, const CompleteFan2& f2);

// Index of the unique weight -1 ray; NotOneExceptional otherwise.
std::size_t unique_exceptional_ray(const CompleteFan2& f);

}  // namespace torifan
