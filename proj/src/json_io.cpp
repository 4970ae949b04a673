#include "torifan/json_io.hpp"

#include <algorithm>

namespace torifan {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Err::ParseError, e.what());
  }
}

namespace {

i64 as_i64(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail(Err::ParseError, std::string(what) + " must be an integer");
  return j.get<i64>();
}

Vec2 vec2_from(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(Err::ParseError, "a lattice point must be a pair [x, y]");
  return {as_i64(j[0], "coordinate"), as_i64(j[1], "coordinate")};
}

Vec3 vec3_from(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    fail(Err::ParseError, "a lattice point must be a triple [x, y, z]");
  return {as_i64(j[0], "coordinate"), as_i64(j[1], "coordinate"), as_i64(j[2], "coordinate")};
}

Json vec2_json(const Vec2& v) { return Json::array({v.x, v.y}); }
Json vec3_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

Json to_json(const WeightedCircularGraph& g) {
  Json j = Json::array();
  for (i64 w : g.weights()) j.push_back(w);
  return j;
}

WeightedCircularGraph graph_from_json(const Json& j) {
  if (!j.is_array()) fail(Err::ParseError, "a weight sequence must be an array");
  std::vector<i64> w;
  w.reserve(j.size());
  for (const Json& e : j) w.push_back(as_i64(e, "weight"));
  return WeightedCircularGraph(std::move(w));
}

Json to_json(const CompleteFan2& f) {
  Json rays = Json::array();
  for (const Vec2& r : f.rays()) rays.push_back(vec2_json(r));
  return Json{{"rays", rays}};
}

CompleteFan2 fan2_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays") || !j["rays"].is_array())
    fail(Err::ParseError, "a fan must be {\"rays\": [[x, y], ...]}");
  std::vector<Vec2> rays;
  rays.reserve(j["rays"].size());
  for (const Json& e : j["rays"]) rays.push_back(vec2_from(e));
  return CompleteFan2(std::move(rays));
}

Json to_json(const ColoredFan2& f) {
  std::vector<Vec2> cycle = f.ray_cycle();  // NotComplete on partial fans
  Json rays = Json::array();
  Json colored = Json::array();
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    rays.push_back(vec2_json(cycle[i]));
    if (f.ray_colored(cycle[i])) colored.push_back(i);
  }
  return Json{{"rays", rays}, {"colored_rays", colored}};
}

ColoredFan2 colored_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays"))
    fail(Err::ParseError, "a colored fan must be {\"rays\": [...], \"colored_rays\": [...]}");
  std::vector<Vec2> rays;
  for (const Json& e : j["rays"]) rays.push_back(vec2_from(e));
  std::vector<bool> colored(rays.size(), false);
  if (j.contains("colored_rays"))
    for (const Json& e : j["colored_rays"]) {
      i64 idx = as_i64(e, "colored ray index");
      if (idx < 0 || idx >= static_cast<i64>(rays.size()))
        fail(Err::ParseError, "colored ray index out of range");
      colored[static_cast<std::size_t>(idx)] = true;
    }
  CompleteFan2 fan(rays);  // validates geometry; may reorder to CCW
  const std::size_t n = fan.size();
  auto is_colored = [&](const Vec2& v) {
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (rays[k] == v) return static_cast<bool>(colored[k]);
    return false;
  };
  std::vector<ColoredCone> cones;
  for (std::size_t i = 0; i < n; ++i) {
    bool cone_colored = is_colored(fan.ray(i)) || is_colored(fan.ray(i + 1));
    cones.push_back(ColoredCone::span(fan.ray(i), fan.ray(i + 1), cone_colored));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_colored(fan.ray(i))) cones.push_back(ColoredCone::ray(fan.ray(i), true));
  return ColoredFan2(std::move(cones));
}

Json to_json(const Fan3& f) {
  Json rays = Json::array();
  for (const Vec3& r : f.rays) rays.push_back(vec3_json(r));
  Json cones = Json::array();
  for (const auto& c : f.max_cones) cones.push_back(Json::array({c[0], c[1], c[2]}));
  return Json{{"rays", rays}, {"max_cones", cones}};
}

Fan3 fan3_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
    fail(Err::ParseError, "a 3D fan must be {\"rays\": [...], \"max_cones\": [...]}");
  Fan3 f;
  for (const Json& e : j["rays"]) f.rays.push_back(vec3_from(e));
  for (const Json& e : j["max_cones"]) {
    if (!e.is_array() || e.size() != 3)
      fail(Err::ParseError, "a maximal cone must be a triple of ray indices");
    std::array<int, 3> c;
    for (int s = 0; s < 3; ++s) {
      i64 idx = as_i64(e[static_cast<std::size_t>(s)], "ray index");
      if (idx < 0 || idx >= static_cast<i64>(f.rays.size()))
        fail(Err::ParseError, "ray index out of range");
      c[static_cast<std::size_t>(s)] = static_cast<int>(idx);
    }
    f.max_cones.push_back(c);
  }
  return f;
}

Json to_json(const ResolutionData& rd) {
  Json rays = Json::array();
  for (const Vec2& r : rd.interior_rays) rays.push_back(vec2_json(r));
  Json weights = Json::array();
  for (i64 w : rd.self_intersections) weights.push_back(w);
  return Json{{"cone", Json::array({vec2_json(rd.cone.gen_a), vec2_json(rd.cone.gen_b)})},
              {"interior_rays", rays},
              {"self_intersections", weights}};
}

Json to_json(const ClassificationResult& res) {
  Json j{{"kind", kind_name(res.kind)}};
  if (res.index) {
    j["a"] = res.index->a;
    j["path"] = steps_str(res.index->path);
    j["r"] = res.index->r.str();
  }
  Json chain = Json::array();
  for (const auto& [vertex, side] : res.blow_down_chain)
    chain.push_back(Json::array({vertex, side == Step::L ? "L" : "R"}));
  j["blow_down_chain"] = chain;
  return j;
}

Json to_json(const EnumerationReport& rep) {
  Json per_a = Json::object();
  for (const auto& [a, count] : rep.per_a_counts) per_a[std::to_string(a)] = count;
  return Json{{"n", rep.n},
              {"total_classes", rep.total_classes},
              {"one_exceptional_classes", rep.one_exceptional_classes},
              {"per_a_counts", per_a}};
}

}  // namespace torifan
