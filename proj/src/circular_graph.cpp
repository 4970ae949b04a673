#include "torifan/circular_graph.hpp"

#include <algorithm>

namespace torifan {

WeightedCircularGraph::WeightedCircularGraph(std::vector<i64> weights) : w_(std::move(weights)) {
  if (w_.size() < 3) fail(Err::TooSmall, "need at least 3 vertices");
  i64 sum = 0;
  for (i64 w : w_) sum = add_i(sum, w);
  i64 expected = sub_i(12, mul_i(3, static_cast<i64>(w_.size())));
  if (sum != expected)
    fail(Err::NotRealizable, "weight sum " + std::to_string(sum) + " != 12 - 3n = " +
                                 std::to_string(expected));
}

WeightedCircularGraph blow_up(const WeightedCircularGraph& g, std::size_t edge) {
  const std::size_t n = g.size();
  if (edge >= n) fail(Err::IndexOutOfRange, "edge index " + std::to_string(edge));
  std::vector<i64> w = g.weights();
  w[edge] = sub_i(w[edge], 1);
  w[(edge + 1) % n] = sub_i(w[(edge + 1) % n], 1);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(edge) + 1, -1);
  return WeightedCircularGraph(std::move(w));
}

WeightedCircularGraph blow_down(const WeightedCircularGraph& g, std::size_t vertex) {
  const std::size_t n = g.size();
  if (vertex >= n) fail(Err::IndexOutOfRange, "vertex index " + std::to_string(vertex));
  if (g.weight(vertex) != -1) fail(Err::NotExceptional, "vertex weight is not -1");
  if (n == 3) fail(Err::TooSmall, "cannot contract a 3-vertex graph");
  std::vector<i64> w = g.weights();
  w[(vertex + n - 1) % n] = add_i(w[(vertex + n - 1) % n], 1);
  w[(vertex + 1) % n] = add_i(w[(vertex + 1) % n], 1);
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(vertex));
  return WeightedCircularGraph(std::move(w));
}

std::vector<std::size_t> exceptional_vertices(const WeightedCircularGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.weight(i) == -1) out.push_back(i);
  return out;
}

namespace {

// All 2n dihedral images as plain weight vectors.
std::vector<i64> rotated(const std::vector<i64>& w, std::size_t start, bool reversed) {
  const std::size_t n = w.size();
  std::vector<i64> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = reversed ? w[(start + n - k % n) % n] : w[(start + k) % n];
  return out;
}

}  // namespace

WeightedCircularGraph canonical_form(const WeightedCircularGraph& g) {
  const std::vector<i64>& w = g.weights();
  std::vector<i64> best = w;
  for (int rev = 0; rev < 2; ++rev)
    for (std::size_t s = 0; s < w.size(); ++s) {
      std::vector<i64> cand = rotated(w, s, rev != 0);
      if (cand < best) best = std::move(cand);
    }
  return WeightedCircularGraph(std::move(best));
}

bool is_isomorphic(const WeightedCircularGraph& g1, const WeightedCircularGraph& g2) {
  if (g1.size() != g2.size()) return false;
  return canonical_form(g1).weights() == canonical_form(g2).weights();
}

}  // namespace torifan
