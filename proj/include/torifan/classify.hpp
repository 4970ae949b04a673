#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torifan/circular_graph.hpp"
#include "torifan/fan2d.hpp"
#include "torifan/rational.hpp"

namespace torifan {

// Branch taken at one node of the binary blow-up tree: L blows up the edge on
// the counterclockwise side of the current exceptional ray, R the clockwise
// side.  farey_value maps L to the lower mediant child.
enum class Step : std::uint8_t { L, R };

std::string steps_str(const std::vector<Step>& path);
std::vector<Step> steps_parse(const std::string& s);  // "LRL"; ParseError

// Complete discrete invariant of a one-exceptional surface on >= 6 rays.
struct FareyIndex {
  i64 a = 1;               // integer part: which tree the surface lives in
  std::vector<Step> path;  // root-to-node walk; empty = the tree root
  Rational r;              // a + value(path); determines (a, path) uniquely

  friend bool operator==(const FareyIndex&, const FareyIndex&) = default;
};

enum class SurfaceKind { NoExceptional, MultipleExceptional, F1, FareyClassified };

const char* kind_name(SurfaceKind k);

struct ClassificationResult {
  SurfaceKind kind = SurfaceKind::NoExceptional;
  std::optional<FareyIndex> index;  // engaged iff kind == FareyClassified
  // One entry per contraction performed, top down: the vertex index that was
  // contracted (in that step's graph) and the side on which its parent -1
  // reappeared.  Reversed, the sides spell the Farey path.
  std::vector<std::pair<std::size_t, Step>> blow_down_chain;
};

// Root of the tree for a >= 1 (NonPositive otherwise): the unique
// one-exceptional class on six vertices whose largest weight is a.
WeightedCircularGraph root_graph(i64 a);

// Stern-Brocot walk below 1: start with bounds 0/1 and 1/1, take mediants,
// L replaces the upper bound, R the lower.  Empty path gives 1/2.
Rational farey_value(const std::vector<Step>& path);

// Inverse of farey_value; requires 0 < delta < 1 (OutOfRange).
std::vector<Step> farey_path(const Rational& delta);

// Full classification of a realizable weighted circular graph.  Throws
// NotRealizable for unrealizable input and InternalContradiction whenever a
// step contradicts the structure theory (a realizable one-exceptional graph
// on n >= 6 vertices contracts along a unique chain to some root_graph(a)).
ClassificationResult classify_surface(const WeightedCircularGraph& g);

// Fan of the one-exceptional surface with invariant r = a + delta > 1
// (non-integer): realize the root graph with seed rays (-1,0), (0,-1) and
// star-subdivide along the Farey path of delta.  The exceptional ray of the
// result is exactly (numerator, denominator) of r.  Deliberately built by
// blow-ups only; agreement with resolve_wps is a theorem, not shared code.
CompleteFan2 build_fan(const Rational& r);

// Executable form of that theorem: the blow-up fan for r = b/c and the
// resolved weighted projective plane P(1, c, b) coincide ray for ray.
bool verify_wps_identification(const Rational& r);

}  // namespace torifan
