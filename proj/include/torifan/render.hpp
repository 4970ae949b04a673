#pragma once

#include <string>

#include "torifan/circular_graph.hpp"
#include "torifan/fan2d.hpp"

namespace torifan {

// Deterministic figure emitters (integer-only coordinate arithmetic, so the
// output is byte-stable across platforms).  The fan pictures show the lattice
// grid, the rays as arrows with their self-intersection weights, and a thin
// polygon through consecutive ray tips.
std::string render_svg(const CompleteFan2& f);
std::string render_tikz(const CompleteFan2& f);

// Circular weight graph in Graphviz dot syntax.
std::string render_dot(const WeightedCircularGraph& g);

}  // namespace torifan
