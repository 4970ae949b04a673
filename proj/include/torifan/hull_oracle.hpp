#pragma once

#include <vector>

#include "torifan/lattice.hpp"

namespace torifan {

// Test-side reference for the resolution walk, sharing no algorithmic code
// with it: the lattice points on the compact face of the convex hull of
// (cone cap lattice) minus the origin, from gen_a to gen_b inclusive, found
// by brute-force point enumeration plus a generic convex hull.
// Requires det2(gen_a, gen_b) > 0.
std::vector<Vec2> hull_boundary_points(const Cone2& c);

}  // namespace torifan
