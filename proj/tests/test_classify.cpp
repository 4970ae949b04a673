#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "torifan/classify.hpp"
#include "torifan/resolve.hpp"

using namespace torifan;

namespace {

std::vector<Step> sp(const std::string& s) { return steps_parse(s); }

}  // namespace

TEST_CASE("step strings round-trip and reject junk") {
  CHECK(steps_str({}) == "");
  CHECK(steps_str({Step::L, Step::R, Step::L}) == "LRL");
  CHECK(steps_parse("").empty());
  CHECK(steps_parse("LRLLR") ==
        std::vector<Step>{Step::L, Step::R, Step::L, Step::L, Step::R});
  CHECK(steps_str(steps_parse("RRLRLLL")) == "RRLRLLL");
  CHECK_FAILS(ParseError, steps_parse("LXR"));
  CHECK_FAILS(ParseError, steps_parse("lr"));
  CHECK_FAILS(ParseError, steps_parse("L R"));
}

TEST_CASE("root graphs") {
  CHECK(root_graph(1).weights() == std::vector<i64>{-1, -2, 1, 0, -2, -2});
  CHECK(root_graph(4).weights() == std::vector<i64>{-1, -2, 4, 0, -5, -2});
  CHECK(root_graph(7).weights() == std::vector<i64>{-1, -2, 7, 0, -8, -2});
  CHECK_FAILS(NonPositive, root_graph(0));
  CHECK_FAILS(NonPositive, root_graph(-3));
}

TEST_CASE("mediant walk values") {
  CHECK(farey_value({}) == Rational(1, 2));
  CHECK(farey_value(sp("L")) == Rational(1, 3));
  CHECK(farey_value(sp("R")) == Rational(2, 3));
  CHECK(farey_value(sp("LL")) == Rational(1, 4));
  CHECK(farey_value(sp("LR")) == Rational(2, 5));
  CHECK(farey_value(sp("RL")) == Rational(3, 5));
  CHECK(farey_value(sp("RR")) == Rational(3, 4));
  CHECK(farey_value(sp("LRL")) == Rational(3, 8));
  CHECK(farey_value(sp("RLR")) == Rational(5, 8));
  CHECK(farey_value(sp("LLLL")) == Rational(1, 6));
  CHECK(farey_value(sp("RRRR")) == Rational(5, 6));
}

TEST_CASE("path search inverts the mediant walk") {
  // exhaustive over every reduced fraction with denominator <= 500
  std::size_t seen = 0;
  for (i64 q = 2; q <= 500; ++q)
    for (i64 p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational d(p, q);
      std::vector<Step> path = farey_path(d);
      REQUIRE_MESSAGE(farey_value(path) == d, d.str());
      ++seen;
    }
  CHECK(seen > 75000);
  CHECK(farey_path(Rational(1, 500)).size() == 498);
  CHECK(farey_path(Rational(499, 500)).size() == 498);

  CHECK_FAILS(OutOfRange, farey_path(Rational(0, 1)));
  CHECK_FAILS(OutOfRange, farey_path(Rational(1, 1)));
  CHECK_FAILS(OutOfRange, farey_path(Rational(3, 2)));
  CHECK_FAILS(OutOfRange, farey_path(Rational(-1, 2)));
}

TEST_CASE("classification kinds on small graphs") {
  auto run = [](std::vector<i64> w) {
    return classify_surface(WeightedCircularGraph(std::move(w)));
  };

  ClassificationResult p2 = run({1, 1, 1});
  CHECK(p2.kind == SurfaceKind::NoExceptional);
  CHECK(!p2.index.has_value());
  CHECK(p2.blow_down_chain.empty());

  CHECK(run({0, 0, 0, 0}).kind == SurfaceKind::NoExceptional);
  CHECK(run({-2, 0, 2, 0}).kind == SurfaceKind::NoExceptional);

  CHECK(run({0, -1, 0, 1}).kind == SurfaceKind::F1);
  CHECK(run({1, 0, -1, 0}).kind == SurfaceKind::F1);
  CHECK(!run({1, 0, -1, 0}).index.has_value());

  CHECK(run({-1, -1, 1, 0, -2}).kind == SurfaceKind::MultipleExceptional);

  // sum law holds but no fan realizes these weights
  CHECK_FAILS(NotRealizable, run({5, -2, -2, -2, -2}));
}

TEST_CASE("kind names") {
  CHECK(std::string(kind_name(SurfaceKind::NoExceptional)) == "NoExceptional");
  CHECK(std::string(kind_name(SurfaceKind::FareyClassified)) == "FareyClassified");
}

TEST_CASE("roots classify as themselves") {
  for (i64 a = 1; a <= 5; ++a) {
    ClassificationResult res = classify_surface(root_graph(a));
    REQUIRE(res.kind == SurfaceKind::FareyClassified);
    REQUIRE(res.index.has_value());
    CHECK(res.index->a == a);
    CHECK(res.index->path.empty());
    CHECK(res.index->r == Rational(2 * a + 1, 2));
    CHECK(res.blow_down_chain.empty());
  }

  // invariance under relabeling: rotate the weight list
  std::vector<i64> w = root_graph(2).weights();
  std::rotate(w.begin(), w.begin() + 3, w.end());
  ClassificationResult res = classify_surface(WeightedCircularGraph(w));
  REQUIRE(res.kind == SurfaceKind::FareyClassified);
  CHECK(res.index->a == 2);
  CHECK(res.index->path.empty());
}

TEST_CASE("one blow-up, either side") {
  WeightedCircularGraph g1 = root_graph(1);  // -1 sits at index 0
  REQUIRE(exceptional_vertices(g1) == std::vector<std::size_t>{0});

  ClassificationResult left = classify_surface(blow_up(g1, 0));
  REQUIRE(left.kind == SurfaceKind::FareyClassified);
  CHECK(left.index->a == 1);
  CHECK(left.index->path == sp("L"));
  CHECK(left.index->r == Rational(4, 3));
  REQUIRE(left.blow_down_chain.size() == 1);
  CHECK(left.blow_down_chain[0].second == Step::L);

  ClassificationResult right = classify_surface(blow_up(g1, 5));
  REQUIRE(right.kind == SurfaceKind::FareyClassified);
  CHECK(right.index->a == 1);
  CHECK(right.index->path == sp("R"));
  CHECK(right.index->r == Rational(5, 3));
  REQUIRE(right.blow_down_chain.size() == 1);
  CHECK(right.blow_down_chain[0].second == Step::R);
}

TEST_CASE("random blow-up sequences are recovered exactly") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 60; ++iter) {
    i64 a = 1 + static_cast<i64>(rng() % 5);
    WeightedCircularGraph g = root_graph(a);
    std::vector<Step> want;
    std::size_t len = rng() % 6;
    for (std::size_t k = 0; k < len; ++k) {
      std::vector<std::size_t> exc = exceptional_vertices(g);
      REQUIRE(exc.size() == 1);
      std::size_t e = exc[0];
      Step s = (rng() & 1) ? Step::L : Step::R;
      g = blow_up(g, s == Step::L ? e : (e + g.size() - 1) % g.size());
      want.push_back(s);
    }
    ClassificationResult res = classify_surface(g);
    REQUIRE(res.kind == SurfaceKind::FareyClassified);
    CHECK(res.index->a == a);
    CHECK(res.index->path == want);
    CHECK(res.index->r == Rational(a, 1) + farey_value(want));
    // contraction runs top-down, so its sides read as the reversed path
    REQUIRE(res.blow_down_chain.size() == want.size());
    std::vector<Step> sides;
    for (auto& [v, s] : res.blow_down_chain) sides.push_back(s);
    std::reverse(sides.begin(), sides.end());
    CHECK(sides == want);
  }
}

TEST_CASE("fan construction fixtures") {
  CompleteFan2 f32 = build_fan(Rational(3, 2));
  CHECK(f32.rays() ==
        std::vector<Vec2>{{-1, 0}, {0, -1}, {1, 0}, {2, 1}, {3, 2}, {1, 1}});
  CHECK(weights_of(f32).weights() == std::vector<i64>{1, 0, -2, -2, -1, -2});
  CHECK(f32.rays()[unique_exceptional_ray(f32)] == Vec2{3, 2});

  CompleteFan2 f43 = build_fan(Rational(4, 3));
  CHECK(f43.size() == 7);
  CHECK(f43.rays()[unique_exceptional_ray(f43)] == Vec2{4, 3});

  CompleteFan2 f53 = build_fan(Rational(5, 3));
  CHECK(f53.size() == 7);
  CHECK(f53.rays()[unique_exceptional_ray(f53)] == Vec2{5, 3});

  CompleteFan2 f125 = build_fan(Rational(12, 5));
  CHECK(f125.size() == 8);
  CHECK(f125.rays()[unique_exceptional_ray(f125)] == Vec2{12, 5});

  CHECK_FAILS(IntegerInput, build_fan(Rational(2, 1)));
  CHECK_FAILS(IntegerInput, build_fan(Rational(1, 1)));
  CHECK_FAILS(OutOfRange, build_fan(Rational(1, 2)));
  CHECK_FAILS(OutOfRange, build_fan(Rational(-3, 2)));
}

TEST_CASE("fan weights classify back to the same invariant") {
  for (Rational r : {Rational(3, 2), Rational(4, 3), Rational(7, 5),
                     Rational(9, 2), Rational(23, 7)}) {
    ClassificationResult res = classify_surface(weights_of(build_fan(r)));
    REQUIRE(res.kind == SurfaceKind::FareyClassified);
    CHECK(res.index->r == r);
  }
}

TEST_CASE("weighted plane identification samples") {
  for (Rational r : {Rational(3, 2), Rational(5, 2), Rational(8, 5),
                     Rational(12, 7), Rational(7, 4), Rational(15, 8)}) {
    CHECK_MESSAGE(verify_wps_identification(r), r.str());
  }
}
