#include "torifan/render.hpp"

#include <algorithm>
#include <sstream>

namespace torifan {

namespace {

i64 abs_i(i64 v) { return v < 0 ? neg_i(v) : v; }

i64 coordinate_span(const CompleteFan2& f) {
  i64 m = 1;
  for (const Vec2& r : f.rays()) m = std::max({m, abs_i(r.x), abs_i(r.y)});
  return m;
}

}  // namespace

std::string render_svg(const CompleteFan2& f) {
  const i64 m = coordinate_span(f) + 1;
  const i64 scale = 48;
  const i64 side = 2 * m * scale;
  auto px = [&](i64 x) { return (x + m) * scale; };
  auto py = [&](i64 y) { return (m - y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
  out << "  <rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
  for (i64 t = -m; t <= m; ++t) {
    out << "  <line x1=\"" << px(t) << "\" y1=\"" << py(-m) << "\" x2=\"" << px(t) << "\" y2=\""
        << py(m) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << px(-m) << "\" y1=\"" << py(t) << "\" x2=\"" << px(m) << "\" y2=\""
        << py(t) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << ' ';
    out << px(f.ray(i).x) << ',' << py(f.ray(i).y);
  }
  out << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  WeightedCircularGraph w = weights_of(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec2& r = f.ray(i);
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(r.x) << "\" y2=\""
        << py(r.y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    out << "  <circle cx=\"" << px(r.x) << "\" cy=\"" << py(r.y) << "\" r=\"5\"/>\n";
    out << "  <text x=\"" << px(r.x) + 8 << "\" y=\"" << py(r.y) - 8 << "\" font-size=\"14\">("
        << r.x << "," << r.y << ") [" << w.weight(i) << "]</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tikz(const CompleteFan2& f) {
  const i64 m = coordinate_span(f) + 1;
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.9]\n";
  out << "  \\draw[help lines, color=gray!30] (" << -m << "," << -m << ") grid (" << m << ","
      << m << ");\n";
  out << "  \\draw[thin, gray]";
  for (std::size_t i = 0; i <= f.size(); ++i)
    out << (i ? " -- " : " ") << "(" << f.ray(i % f.size()).x << "," << f.ray(i % f.size()).y
        << ")";
  out << ";\n";
  WeightedCircularGraph w = weights_of(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec2& r = f.ray(i);
    out << "  \\draw[->, very thick] (0,0) -- (" << r.x << "," << r.y << ") node[anchor=south west]{$("
        << r.x << "," << r.y << ")\\,[" << w.weight(i) << "]$};\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_dot(const WeightedCircularGraph& g) {
  std::ostringstream out;
  out << "graph weights {\n  layout=circo;\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << "  v" << i << " [label=\"" << g.weight(i) << "\"];\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << "  v" << i << " -- v" << (i + 1) % g.size() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace torifan
