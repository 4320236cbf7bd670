#include "superlambda/render.hpp"

#include <algorithm>
#include <sstream>

namespace sl {

namespace {

std::string label_name(int label, const Alphabet& a) { return label == kUnit ? "1" : a.even_name(label); }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

std::string tex_name(const std::string& s) {
  if (s.rfind("th", 0) == 0 && s.size() > 2) return "\\theta_{" + s.substr(2) + "}";
  if (s == "sigma" || s == "theta") return "\\" + s;
  return s;
}

}  // namespace

std::string render_svg(const SnakeGraph& g, const Alphabet& a, const DoubleDimerCover* cover) {
  const int u = 80, pad = 30;
  int maxx = 0, maxy = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    maxx = std::max(maxx, g.point(v).x);
    maxy = std::max(maxy, g.point(v).y);
  }
  int w = maxx * u + 2 * pad, h = maxy * u + 2 * pad;
  auto X = [&](int x) { return pad + x * u; };
  auto Y = [&](int y) { return h - pad - y * u; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\" font-family=\"serif\" font-size=\"12\">\n";
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    Point p = g.point(ed.u), q = g.point(ed.v);
    int mult = cover ? (*cover)[e] : 0;
    std::string style = "stroke=\"black\" stroke-width=\"1\"";
    if (mult == 2) style = "stroke=\"#1f4fbf\" stroke-width=\"4\"";
    if (mult == 1) style = "stroke=\"#e07b00\" stroke-width=\"3\" stroke-dasharray=\"6,4\"";
    os << "  <line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
       << "\" " << style << "/>\n";
    double mx = (X(p.x) + X(q.x)) / 2.0, my = (Y(p.y) + Y(q.y)) / 2.0;
    if (p.x == q.x)
      mx += 4;
    else
      my -= 4;
    os << "  <text x=\"" << mx << "\" y=\"" << my << "\">" << xml_escape(label_name(ed.label, a)) << "</text>\n";
  }
  for (const Tile& t : g.tiles()) {
    Point o = g.origin(t.index);
    if (t.diagonal != kUnit)
      os << "  <text x=\"" << X(o.x) + u / 2 - 6 << "\" y=\"" << Y(o.y) - u / 2 + 4 << "\" fill=\"gray\">"
         << xml_escape(label_name(t.diagonal, a)) << "</text>\n";
    if (t.corner_bl >= 0)
      os << "  <text x=\"" << X(o.x) + 6 << "\" y=\"" << Y(o.y) - 6 << "\" font-size=\"10\">"
         << xml_escape(a.odd_name(t.corner_bl)) << "</text>\n";
    if (t.corner_tr >= 0)
      os << "  <text x=\"" << X(o.x) + u - 24 << "\" y=\"" << Y(o.y) - u + 16 << "\" font-size=\"10\">"
         << xml_escape(a.odd_name(t.corner_tr)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tikz(const SnakeGraph& g, const Alphabet& a, const DoubleDimerCover* cover) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=1.2]\n";
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    Point p = g.point(ed.u), q = g.point(ed.v);
    int mult = cover ? (*cover)[e] : 0;
    std::string style = "thin";
    if (mult == 2) style = "blue, line width=2pt";
    if (mult == 1) style = "orange, dashed, line width=1.5pt";
    const char* anchor = p.x == q.x ? "right" : "above";
    os << "  \\draw[" << style << "] (" << p.x << "," << p.y << ") -- node[" << anchor
       << ", font=\\scriptsize] {$" << tex_name(label_name(ed.label, a)) << "$} (" << q.x << "," << q.y << ");\n";
  }
  for (const Tile& t : g.tiles()) {
    Point o = g.origin(t.index);
    if (t.diagonal != kUnit)
      os << "  \\node[gray, font=\\scriptsize] at (" << o.x + 0.5 << "," << o.y + 0.5 << ") {$"
         << tex_name(label_name(t.diagonal, a)) << "$};\n";
    if (t.corner_bl >= 0)
      os << "  \\node[font=\\tiny] at (" << o.x + 0.18 << "," << o.y + 0.18 << ") {$" << tex_name(a.odd_name(t.corner_bl))
         << "$};\n";
    if (t.corner_tr >= 0)
      os << "  \\node[font=\\tiny] at (" << o.x + 0.82 << "," << o.y + 0.82 << ") {$" << tex_name(a.odd_name(t.corner_tr))
         << "$};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace sl
