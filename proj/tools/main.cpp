#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "torifan/checks.hpp"
#include "torifan/classify.hpp"
#include "torifan/enumerate.hpp"
#include "torifan/horospherical.hpp"
#include "torifan/json_io.hpp"
#include "torifan/render.hpp"
#include "torifan/resolve.hpp"

using namespace torifan;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json fan3_report(const Fan3& f) {
  Json j = to_json(f);
  j["smooth"] = is_smooth(f);
  j["complete"] = is_complete(f);
  return j;
}

std::string write_figure(const CompleteFan2& fan, const Rational& r, const std::string& fmt,
                         std::string path) {
  std::string body;
  std::string ext;
  if (fmt == "svg") {
    body = render_svg(fan);
    ext = "svg";
  } else if (fmt == "dot") {
    body = render_dot(weights_of(fan));
    ext = "dot";
  } else {
    body = render_tikz(fan);
    ext = "tex";
  }
  if (path.empty())
    path = "fan_" + std::to_string(r.num) + "_" + std::to_string(r.den) + "." + ext;
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::ParseError, "cannot open '" + path + "' for writing");
  out << body;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice fans of toric surfaces: classification by mediant paths,\n"
               "quotient singularity resolution, colored fans and 3D minimal models"};
  app.set_version_flag("--version", "torifan 1.0.0");
  app.require_subcommand(1);
  int rc = 0;
  bool json_out = true;  // JSON is the only structured output; flag kept for scripts

  std::string weights_in, fan_in;
  auto* cmd_classify = app.add_subcommand("classify", "classify a surface given as a weight cycle or a fan");
  cmd_classify->add_option("--weights", weights_in, "self-intersection cycle, e.g. \"[-1,-2,1,0,-2,-2]\"");
  cmd_classify->add_option("--fan", fan_in, "fan document, e.g. '{\"rays\": [[1,0],[0,1],[-1,-1]]}'");
  cmd_classify->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_classify->callback([&]() {
    if (weights_in.empty() == fan_in.empty())
      fail(Err::ParseError, "exactly one of --weights or --fan is required");
    WeightedCircularGraph g = weights_in.empty()
                                  ? weights_of(fan2_from_json(parse_json(fan_in)))
                                  : graph_from_json(parse_json(weights_in));
    emit(to_json(classify_surface(g)));
  });

  std::string r_in, render_fmt, out_path;
  auto* cmd_build = app.add_subcommand("build", "build the fan of the surface with the given invariant");
  cmd_build->add_option("r", r_in, "non-integer rational above 1, e.g. 7/2")->required();
  cmd_build->add_option("--render", render_fmt, "also write a figure file")
      ->check(CLI::IsMember({"svg", "dot", "tikz"}));
  cmd_build->add_option("--out", out_path, "figure path (default fan_<num>_<den>.<ext>)");
  cmd_build->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_build->callback([&]() {
    Rational r = Rational::parse(r_in);
    if (r.is_integer() || r <= Rational(1, 1))
      fail(Err::BadRational, "the invariant must be a non-integer rational above 1, got " + r.str());
    CompleteFan2 fan = build_fan(r);
    Json j = to_json(fan);
    j["weights"] = to_json(weights_of(fan));
    j["exceptional_ray"] = unique_exceptional_ray(fan);
    if (!render_fmt.empty()) j["rendered"] = write_figure(fan, r, render_fmt, out_path);
    emit(j);
  });

  i64 c_in = 0, b_in = 0;
  auto* cmd_resolve = app.add_subcommand("resolve", "resolve the weighted plane with weights (1, c, b)");
  cmd_resolve->add_option("c", c_in, "middle weight, 1 <= c < b")->required();
  cmd_resolve->add_option("b", b_in, "top weight, coprime to c")->required();
  cmd_resolve->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_resolve->callback([&]() {
    std::array<Vec2, 3> rays = wps_rays(c_in, b_in);
    ResolutionData below = minimal_resolution(Cone2(rays[2], rays[0]));
    ResolutionData above = minimal_resolution(Cone2(rays[0], rays[1]));
    Json j;
    j["rays"] = Json::array({Json::array({rays[0].x, rays[0].y}),
                             Json::array({rays[1].x, rays[1].y}),
                             Json::array({rays[2].x, rays[2].y})});
    j["chains"] = Json::array({to_json(below), to_json(above)});
    j["determinant_check"] = Json::array({determinant_check(below), determinant_check(above)});
    if (c_in >= 2) {
      CompleteFan2 fan = resolve_wps(c_in, b_in);
      j["fan"] = to_json(fan);
      j["weights"] = to_json(weights_of(fan));
    }
    emit(j);
  });

  i64 p_in = 0, q_in = 0;
  bool emit_all = false;
  auto* cmd_house = app.add_subcommand("house", "3D minimal model for coprime parameters p > 1, q >= 1");
  cmd_house->add_option("p", p_in, "p > 1")->required();
  cmd_house->add_option("q", q_in, "q >= 1, coprime to p")->required();
  cmd_house->add_flag("--all", emit_all, "also emit the fibration fan and its fiberwise contraction");
  cmd_house->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_house->callback([&]() {
    Fan3 hm = house_model(p_in, q_in);  // validates the parameters
    if (!emit_all) {
      emit(fan3_report(hm));
      return;
    }
    Fan3 fib = build_fibration_fan(build_fan(Rational(add_i(p_in, q_in), p_in)));
    emit(Json{{"fibration", fan3_report(fib)},
              {"fiberwise", fan3_report(contract_fiberwise(fib))},
              {"house", fan3_report(hm)}});
  });

  std::string farey_in;
  bool force_path = false;
  auto* cmd_farey = app.add_subcommand("farey", "mediant tree lookup in both directions");
  cmd_farey->add_option("input", farey_in, "a rational in (0,1) like 3/8, or an L/R path like LRL")
      ->required();
  cmd_farey->add_flag("--path", force_path, "read the input as an L/R path even if empty");
  cmd_farey->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_farey->callback([&]() {
    std::vector<Step> path;
    Rational value;
    if (force_path || farey_in.find_first_not_of("LR") == std::string::npos) {
      path = steps_parse(farey_in);
      value = farey_value(path);
    } else {
      value = Rational::parse(farey_in);
      path = farey_path(value);
    }
    emit(Json{{"path", steps_str(path)}, {"value", value.str()}, {"level", path.size()}});
  });

  i64 max_n = 0, max_a = 0;
  auto* cmd_enum = app.add_subcommand("enumerate", "census of blow-up classes (TORIFAN_THREADS caps workers)");
  cmd_enum->add_option("max_n", max_n, "largest vertex count, at most 12")->required();
  cmd_enum->add_option("max_a", max_a, "largest seed parameter, at most 8")->required();
  cmd_enum->add_flag("--json", json_out, "emit JSON to stdout (default)");
  cmd_enum->callback([&]() {
    Json arr = Json::array();
    for (const EnumerationReport& rep : run_enumeration(static_cast<int>(max_n), max_a))
      arr.push_back(to_json(rep));
    emit(arr);
  });

  auto* cmd_check = app.add_subcommand("check", "run the full release gate and report per-criterion lines");
  cmd_check->callback([&]() { rc = report_acceptance(std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", err_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return rc;
}
