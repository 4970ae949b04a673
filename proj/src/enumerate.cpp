#include "torifan/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <string>
#include <thread>

#include "torifan/classify.hpp"
#include "torifan/circular_graph.hpp"

namespace torifan {

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("TORIFAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 64) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

using Key = std::vector<i64>;

std::set<Key> expand_level(const std::set<Key>& level) {
  std::vector<Key> items(level.begin(), level.end());
  const unsigned workers =
      items.size() >= 64 ? std::min<unsigned>(worker_count(), static_cast<unsigned>(items.size()))
                         : 1;
  auto expand_range = [&items](std::size_t lo, std::size_t hi) {
    std::set<Key> out;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      WeightedCircularGraph g(items[idx]);
      for (std::size_t e = 0; e < g.size(); ++e)
        out.insert(canonical_form(blow_up(g, e)).weights());
    }
    return out;
  };
  if (workers <= 1) return expand_range(0, items.size());

  std::vector<std::future<std::set<Key>>> futures;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = std::min(items.size(), static_cast<std::size_t>(w) * chunk);
    std::size_t hi = std::min(items.size(), lo + chunk);
    if (lo < hi)
      futures.push_back(std::async(std::launch::async, expand_range, lo, hi));
  }
  std::set<Key> merged;
  for (auto& f : futures) merged.merge(f.get());
  return merged;
}

void contradict(const std::string& what) { fail(Err::InternalContradiction, what); }

}  // namespace

std::vector<EnumerationReport> run_enumeration(int max_n, i64 max_a) {
  if (max_n > 12 || max_a > 8)
    fail(Err::BoundsExceeded, "supported ranges: max_n <= 12, max_a <= 8");
  if (max_n < 3 || max_a < 0) fail(Err::OutOfRange, "need max_n >= 3 and max_a >= 0");

  std::vector<EnumerationReport> reports;
  std::set<Key> level{canonical_form(WeightedCircularGraph({1, 1, 1})).weights()};

  for (int n = 3; n <= max_n; ++n) {
    if (n > 3) {
      level = expand_level(level);
      if (n == 4)
        for (i64 a = 0; a <= max_a; ++a)
          level.insert(
              canonical_form(WeightedCircularGraph({neg_i(a), 0, a, 0})).weights());
    }

    EnumerationReport rep;
    rep.n = n;
    rep.total_classes = level.size();
    for (const Key& k : level) {
      WeightedCircularGraph g(k);
      if (exceptional_vertices(g).size() != 1) continue;
      rep.one_exceptional_classes += 1;
      if (n >= 6) {
        ClassificationResult res = classify_surface(g);
        if (res.kind != SurfaceKind::FareyClassified)
          contradict("one-exceptional class at n >= 6 did not Farey-classify");
        if (n == 6 && !res.index->path.empty())
          contradict("six-vertex class classified with a nonempty path");
        rep.per_a_counts[res.index->a] += 1;
      }
    }

    if (n == 3 && rep.one_exceptional_classes != 0)
      contradict("one-exceptional class on 3 vertices");
    if (n == 4 && rep.one_exceptional_classes != (max_a >= 1 ? 1u : 0u))
      contradict("n=4 must have exactly the one blow-up class");
    if (n == 5 && rep.one_exceptional_classes != 0)
      contradict("one-exceptional class on 5 vertices");
    if (n == 6) {
      // every tree root with index clear of the seed boundary must be present
      for (i64 a = 1; a + 1 <= max_a; ++a)
        if (rep.per_a_counts.find(a) == rep.per_a_counts.end())
          contradict("missing six-vertex class for a = " + std::to_string(a));
    }
    if (n >= 6) {
      // away from the seed boundary each class has both children, so counts
      // double per level
      std::size_t expected = static_cast<std::size_t>(1) << (n - 6);
      for (i64 a = 1; a + 2 <= max_a; ++a) {
        auto it = rep.per_a_counts.find(a);
        if (it == rep.per_a_counts.end() || it->second != expected)
          contradict("per-a class count is not 2^(n-6) for a = " + std::to_string(a));
      }
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace torifan
