#pragma once

#include <cstddef>
#include <vector>

#include "torifan/checked.hpp"

namespace torifan {

// Cyclic sequence of self-intersection weights w_0..w_{n-1}, n >= 3.  Vertex
// indices count counterclockwise; edge e joins vertices e and e+1 (mod n).
//
// Every constructed graph must satisfy sum(w) == 12 - 3n.  The law holds for
// all weight sequences of complete regular fans (induction from the triangle
// fan over blow-ups, each adding one vertex and lowering the sum by 3), so
// rejecting violators up front costs O(n) and catches corrupt input early.
// Realizability itself is deliberately not checked here; realize() in fan2d
// decides it.
class WeightedCircularGraph {
 public:
  explicit WeightedCircularGraph(std::vector<i64> weights);

  std::size_t size() const { return w_.size(); }
  i64 weight(std::size_t i) const { return w_[i % w_.size()]; }
  const std::vector<i64>& weights() const { return w_; }

  friend bool operator==(const WeightedCircularGraph&, const WeightedCircularGraph&) = default;

 private:
  std::vector<i64> w_;
};

// Inserts a -1 vertex on edge e and lowers both endpoint weights by one.
// The new vertex sits at index e+1 of the result.
WeightedCircularGraph blow_up(const WeightedCircularGraph& g, std::size_t edge);

// Removes vertex v (weight must be -1) and raises both neighbor weights by
// one.  Indices above v shift down by one; removing vertex 0 makes old
// vertex 1 the new start.
WeightedCircularGraph blow_down(const WeightedCircularGraph& g, std::size_t vertex);

std::vector<std::size_t> exceptional_vertices(const WeightedCircularGraph& g);

// Equality of the dihedral classes (all rotations and both directions).
bool is_isomorphic(const WeightedCircularGraph& g1, const WeightedCircularGraph& g2);

// Lexicographically least representative over all 2n rotations/reflections;
// complete invariant for is_isomorphic and the dedup key in enumeration.
WeightedCircularGraph canonical_form(const WeightedCircularGraph& g);

}  // namespace torifan
