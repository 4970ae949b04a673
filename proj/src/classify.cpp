#include "torifan/classify.hpp"

#include <algorithm>

#include "torifan/resolve.hpp"

namespace torifan {

std::string steps_str(const std::vector<Step>& path) {
  std::string s;
  s.reserve(path.size());
  for (Step st : path) s += (st == Step::L ? 'L' : 'R');
  return s;
}

std::vector<Step> steps_parse(const std::string& s) {
  std::vector<Step> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == 'L') out.push_back(Step::L);
    else if (c == 'R') out.push_back(Step::R);
    else fail(Err::ParseError, "path may only contain L and R: '" + s + "'");
  }
  return out;
}

const char* kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::NoExceptional: return "NoExceptional";
    case SurfaceKind::MultipleExceptional: return "MultipleExceptional";
    case SurfaceKind::F1: return "F1";
    case SurfaceKind::FareyClassified: return "FareyClassified";
  }
  return "UnknownKind";
}

WeightedCircularGraph root_graph(i64 a) {
  if (a < 1) fail(Err::NonPositive, "tree index must be a positive integer");
  return WeightedCircularGraph({-1, -2, a, 0, sub_i(neg_i(a), 1), -2});
}

Rational farey_value(const std::vector<Step>& path) {
  Rational lo(0, 1), hi(1, 1);
  Rational m = mediant(lo, hi);
  for (Step s : path) {
    if (s == Step::L) hi = m;
    else lo = m;
    m = mediant(lo, hi);
  }
  return m;
}

std::vector<Step> farey_path(const Rational& delta) {
  if (!(Rational(0, 1) < delta) || !(delta < Rational(1, 1)))
    fail(Err::OutOfRange, "need 0 < delta < 1, got " + delta.str());
  std::vector<Step> path;
  Rational lo(0, 1), hi(1, 1);
  for (;;) {
    Rational m = mediant(lo, hi);
    if (m == delta) return path;
    if (delta < m) {
      path.push_back(Step::L);
      hi = m;
    } else {
      path.push_back(Step::R);
      lo = m;
    }
    // Stern-Brocot search reaches any reduced fraction in finitely many
    // steps; the denominators of the bounds grow strictly, so this is
    // unreachable for valid input.
    if (path.size() > 1000000)
      fail(Err::InternalContradiction, "mediant search failed to terminate");
  }
}

namespace {

// Shape every graph along a contraction chain must have (n >= 6): exactly one
// -1, exactly three weights >= -1 overall (the -1, a 0 and some a >= 1), the
// 0 and the a adjacent to each other and neither adjacent to the -1.  Returns
// a.  Any violation falsifies the structure theory for realizable
// one-exceptional graphs, hence InternalContradiction.
i64 chain_shape_a(const WeightedCircularGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> soft;
  for (std::size_t i = 0; i < n; ++i)
    if (g.weight(i) >= -1) soft.push_back(i);
  if (soft.size() != 3)
    fail(Err::InternalContradiction, "chain graph must have exactly 3 weights >= -1");
  std::size_t i_exc = n, i_zero = n, i_a = n;
  for (std::size_t i : soft) {
    if (g.weight(i) == -1 && i_exc == n) i_exc = i;
    else if (g.weight(i) == 0 && i_zero == n) i_zero = i;
    else if (g.weight(i) >= 1 && i_a == n) i_a = i;
  }
  if (i_exc == n || i_zero == n || i_a == n)
    fail(Err::InternalContradiction, "chain graph weights >= -1 are not {-1, 0, a}");
  auto adjacent = [n](std::size_t i, std::size_t j) {
    return (i + 1) % n == j || (j + 1) % n == i;
  };
  if (!adjacent(i_zero, i_a))
    fail(Err::InternalContradiction, "chain graph: 0 and a are not adjacent");
  if (adjacent(i_exc, i_zero) || adjacent(i_exc, i_a))
    fail(Err::InternalContradiction, "chain graph: -1 adjacent to the marked pair");
  return g.weight(i_a);
}

}  // namespace

ClassificationResult classify_surface(const WeightedCircularGraph& g) {
  realize(g, {1, 0}, {0, 1});  // realizability gate; result not needed

  ClassificationResult res;
  std::vector<std::size_t> exc = exceptional_vertices(g);
  if (exc.empty()) {
    res.kind = SurfaceKind::NoExceptional;
    return res;
  }
  if (exc.size() > 1) {
    res.kind = SurfaceKind::MultipleExceptional;
    return res;
  }
  const std::size_t n = g.size();
  if (n <= 5) {
    if (n == 4) {
      res.kind = SurfaceKind::F1;
      return res;
    }
    fail(Err::InternalContradiction,
         "realizable graph with exactly one -1 on " + std::to_string(n) + " vertices");
  }

  WeightedCircularGraph cur = g;
  const i64 a = chain_shape_a(cur);
  std::vector<Step> recorded;  // top-down; the path reads bottom-up
  while (cur.size() > 6) {
    const std::size_t m = cur.size();
    std::size_t v = exceptional_vertices(cur)[0];
    WeightedCircularGraph next = blow_down(cur, v);
    std::vector<std::size_t> exc2 = exceptional_vertices(next);
    if (exc2.size() != 1)
      fail(Err::InternalContradiction, "contraction did not leave exactly one -1");
    // index of the new -1 in cur's coordinates (erase shifted indices >= v)
    std::size_t old = exc2[0] + (exc2[0] >= v ? 1 : 0);
    Step side;
    if (old == (v + m - 1) % m) side = Step::L;
    else if (old == (v + 1) % m) side = Step::R;
    else
      fail(Err::InternalContradiction, "parent -1 not adjacent to the contracted vertex");
    res.blow_down_chain.emplace_back(v, side);
    recorded.push_back(side);
    cur = next;
    if (chain_shape_a(cur) != a)
      fail(Err::InternalContradiction, "marked weight pair changed under contraction");
  }
  if (!is_isomorphic(cur, root_graph(a)))
    fail(Err::InternalContradiction, "contraction chain did not end at a root graph");

  FareyIndex idx;
  idx.a = a;
  idx.path.assign(recorded.rbegin(), recorded.rend());
  idx.r = Rational(a, 1) + farey_value(idx.path);
  res.kind = SurfaceKind::FareyClassified;
  res.index = std::move(idx);
  return res;
}

CompleteFan2 build_fan(const Rational& r) {
  if (r.is_integer()) fail(Err::IntegerInput, "invariant must be a non-integer rational");
  if (r < Rational(1, 1)) fail(Err::OutOfRange, "invariant must exceed 1, got " + r.str());
  const i64 a = r.floor();
  std::vector<Step> path = farey_path(r.frac());

  WeightedCircularGraph root({a, 0, sub_i(neg_i(a), 1), -2, -1, -2});
  CompleteFan2 fan = realize(root, {-1, 0}, {0, -1});
  for (Step s : path) {
    std::size_t e = unique_exceptional_ray(fan);
    std::size_t m = fan.size();
    fan = star_subdivide(fan, s == Step::L ? e : (e + m - 1) % m);
  }
  std::size_t e = unique_exceptional_ray(fan);
  if (fan.ray(e) != Vec2{r.num, r.den})
    fail(Err::InternalContradiction, "exceptional ray is not (numerator, denominator)");
  return fan;
}

bool verify_wps_identification(const Rational& r) {
  CompleteFan2 walked = build_fan(r);
  CompleteFan2 resolved = resolve_wps(r.den, r.num);
  return same_fan(walked, resolved);
}

}  // namespace torifan
