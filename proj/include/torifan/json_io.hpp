#pragma once

#include <string>

#include "json.hpp"
#include "torifan/circular_graph.hpp"
#include "torifan/classify.hpp"
#include "torifan/enumerate.hpp"
#include "torifan/fan2d.hpp"
#include "torifan/horospherical.hpp"
#include "torifan/resolve.hpp"

namespace torifan {

// Insertion-ordered so emitted documents keep a stable, readable field order.
using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);  // ParseError with byte position

// weighted circular graph <-> [w0, w1, ...]
Json to_json(const WeightedCircularGraph& g);
WeightedCircularGraph graph_from_json(const Json& j);

// complete fan <-> {"rays": [[x, y], ...]}
Json to_json(const CompleteFan2& f);
CompleteFan2 fan2_from_json(const Json& j);

// colored fan <-> {"rays": [...], "colored_rays": [indices]}; complete fans only
Json to_json(const ColoredFan2& f);
ColoredFan2 colored_from_json(const Json& j);

// 3D fan <-> {"rays": [[x, y, z], ...], "max_cones": [[i, j, k], ...]}
Json to_json(const Fan3& f);
Fan3 fan3_from_json(const Json& j);

Json to_json(const ResolutionData& rd);
Json to_json(const ClassificationResult& res);
Json to_json(const EnumerationReport& rep);

}  // namespace torifan
