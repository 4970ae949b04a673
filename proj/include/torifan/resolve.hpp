#pragma once

#include <array>
#include <vector>

#include "torifan/fan2d.hpp"
#include "torifan/lattice.hpp"

namespace torifan {

// Minimal resolution data of the cyclic quotient singularity of a 2D cone:
// interior_rays are the rays to insert strictly between gen_a and gen_b (in
// counterclockwise order), self_intersections[i] the weight the i-th new ray
// carries in the subdivided fan.  All entries are <= -2: the chain is already
// minimal, nothing can be contracted.
struct ResolutionData {
  Cone2 cone;
  std::vector<Vec2> interior_rays;
  std::vector<i64> self_intersections;
};

// Walks the compact face of conv(cone cap lattice minus origin) from gen_a to
// gen_b.  Requires det2(gen_a, gen_b) > 0 (WrongOrientation otherwise); a
// smooth cone resolves to the empty chain.
ResolutionData minimal_resolution(const Cone2& c);

// Classical cross-check: the tridiagonal matrix with the chain's weights on
// the diagonal and unit off-diagonals has determinant (-1)^k * order(cone).
bool determinant_check(const ResolutionData& rd);

// Rays of the weighted projective plane P(1, c, b): (b, c), (-1, 0), (0, -1).
// Requires b > c >= 1 and gcd(b, c) == 1.
std::array<Vec2, 3> wps_rays(i64 c, i64 b);

// Full minimal resolution of P(1, c, b) for b > c >= 2: both singular cones
// of wps_rays get their chains inserted, yielding a complete regular fan.
CompleteFan2 resolve_wps(i64 c, i64 b);

}  // namespace torifan
