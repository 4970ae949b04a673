#include <numeric>
#include <vector>

#include "test_util.hpp"
#include "torifan/hull_oracle.hpp"
#include "torifan/resolve.hpp"

using namespace torifan;

TEST_CASE("smooth cones resolve to the empty chain") {
  ResolutionData rd = minimal_resolution(Cone2({1, 0}, {0, 1}));
  CHECK(rd.interior_rays.empty());
  CHECK(rd.self_intersections.empty());
  CHECK(determinant_check(rd));  // empty product gives determinant 1
  CHECK(minimal_resolution(Cone2({0, -1}, {1, 0})).interior_rays.empty());
}

TEST_CASE("reference resolutions of the two singular cones at (3,2)") {
  ResolutionData below = minimal_resolution(Cone2({0, -1}, {3, 2}));
  CHECK(below.interior_rays == std::vector<Vec2>{{1, 0}, {2, 1}});
  CHECK(below.self_intersections == std::vector<i64>{-2, -2});
  CHECK(determinant_check(below));

  ResolutionData above = minimal_resolution(Cone2({3, 2}, {-1, 0}));
  CHECK(above.interior_rays == std::vector<Vec2>{{1, 1}});
  CHECK(above.self_intersections == std::vector<i64>{-2});
  CHECK(determinant_check(above));
}

TEST_CASE("resolution rejects clockwise input") {
  CHECK_FAILS(WrongOrientation, minimal_resolution(Cone2({0, 1}, {1, 0})));
  CHECK_FAILS(WrongOrientation, minimal_resolution(Cone2({3, 2}, {0, -1})));
}

TEST_CASE("every chain weight is at most -2 and the determinant identity holds") {
  for (i64 d = 2; d <= 25; ++d)
    for (i64 q = 1; q < d; ++q) {
      if (std::gcd(q, d) != 1) continue;
      ResolutionData rd = minimal_resolution(Cone2({1, 0}, {q, d}));
      CHECK(!rd.interior_rays.empty());
      for (i64 w : rd.self_intersections) CHECK(w <= -2);
      CHECK(determinant_check(rd));
      // consecutive rays of the subdivided cone form positive bases
      std::vector<Vec2> chain{rd.cone.gen_a};
      chain.insert(chain.end(), rd.interior_rays.begin(), rd.interior_rays.end());
      chain.push_back(rd.cone.gen_b);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        CHECK(det2(chain[i], chain[i + 1]) == 1);
    }
}

TEST_CASE("the determinant identity fails on a doctored chain") {
  ResolutionData rd = minimal_resolution(Cone2({0, -1}, {3, 2}));
  rd.self_intersections[0] = -3;
  CHECK_FALSE(determinant_check(rd));
}

TEST_CASE("the hull oracle agrees with the walk on arbitrary cones") {
  for (i64 d = 1; d <= 18; ++d)
    for (i64 qa = -6; qa <= 6; ++qa)
      for (i64 qb = -6; qb <= 6; ++qb) {
        Vec2 a{3, qa}, b{qb, d};
        if (a == Vec2{0, 0} || b == Vec2{0, 0}) continue;
        if (det2(a, b) <= 0) continue;
        Cone2 c(a, b);
        ResolutionData rd = minimal_resolution(c);
        std::vector<Vec2> chain{c.gen_a};
        chain.insert(chain.end(), rd.interior_rays.begin(), rd.interior_rays.end());
        chain.push_back(c.gen_b);
        CHECK(hull_boundary_points(c) == chain);
      }
}

TEST_CASE("hull oracle basics") {
  CHECK(hull_boundary_points(Cone2({1, 0}, {0, 1})) == std::vector<Vec2>{{1, 0}, {0, 1}});
  CHECK(hull_boundary_points(Cone2({1, 0}, {1, 2})) ==
        std::vector<Vec2>{{1, 0}, {1, 1}, {1, 2}});
  CHECK_FAILS(WrongOrientation, hull_boundary_points(Cone2({0, 1}, {1, 0})));
}

TEST_CASE("weighted plane rays demand coprime ordered weights") {
  std::array<Vec2, 3> rays = wps_rays(2, 3);
  CHECK(rays[0] == Vec2{3, 2});
  CHECK(rays[1] == Vec2{-1, 0});
  CHECK(rays[2] == Vec2{0, -1});
  CHECK(wps_rays(1, 3)[0] == Vec2{3, 1});
  CHECK_FAILS(OutOfRange, wps_rays(0, 3));
  CHECK_FAILS(OutOfRange, wps_rays(3, 2));
  CHECK_FAILS(OutOfRange, wps_rays(2, 2));
  CHECK_FAILS(NotCoprime, wps_rays(2, 4));
}

TEST_CASE("resolving the weighted plane gives the documented fans") {
  CompleteFan2 f32 = resolve_wps(2, 3);
  CHECK(f32.rays() ==
        std::vector<Vec2>{{-1, 0}, {0, -1}, {1, 0}, {2, 1}, {3, 2}, {1, 1}});
  CHECK(weights_of(f32).weights() == std::vector<i64>{1, 0, -2, -2, -1, -2});

  CompleteFan2 f52 = resolve_wps(2, 5);
  CHECK(f52.rays() ==
        std::vector<Vec2>{{-1, 0}, {0, -1}, {1, 0}, {3, 1}, {5, 2}, {2, 1}});
  CHECK(weights_of(f52).weights() == std::vector<i64>{2, 0, -3, -2, -1, -2});

  CHECK_FAILS(OutOfRange, resolve_wps(1, 3));
  CHECK_FAILS(NotCoprime, resolve_wps(2, 4));
  CHECK_FAILS(OutOfRange, resolve_wps(3, 2));
}
