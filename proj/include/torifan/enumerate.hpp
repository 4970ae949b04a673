#pragma once

#include <map>
#include <vector>

#include "torifan/checked.hpp"

namespace torifan {

struct EnumerationReport {
  int n = 0;
  std::size_t total_classes = 0;
  std::size_t one_exceptional_classes = 0;
  // classification invariant a -> number of one-exceptional classes (n >= 6)
  std::map<i64, std::size_t> per_a_counts;

  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

// Closes {triangle graph, the n=4 two-parameter seeds for 0 <= a <= max_a}
// under blow-ups through max_n vertices, modulo dihedral classes, and checks
// the classification facts level by level (exactly one one-exceptional class
// at n=4, none at n=3 and n=5, every one-exceptional class at n >= 6
// classifies, per-a counts double per level away from the seed boundary).
// Any violation throws InternalContradiction.  BoundsExceeded above
// max_n = 12 or max_a = 8.  TORIFAN_THREADS caps worker threads; results are
// deterministic regardless.
std::vector<EnumerationReport> run_enumeration(int max_n, i64 max_a);

}  // namespace torifan
