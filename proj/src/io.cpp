#include "superlambda/io.hpp"

#include <fstream>
#include <sstream>

#include "superlambda/snake.hpp"

namespace sl {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::parse, what); }

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw parse_error("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw parse_error("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string edge_key(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

std::string tri_key(const Tri& t) {
  return std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

std::string exponent_text(int twice) {
  return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

}  // namespace

Json load_json(const std::string& source) {
  std::string text = source;
  auto first = source.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (source[first] != '{' && source[first] != '[')) {
    std::ifstream in(source);
    if (!in) throw parse_error("cannot read '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

LabeledTriangulation parse_triangulation(const Json& j, bool seed_labels) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw parse_error("triangulation needs an integer field n");
  int n = j["n"].get<int>();
  if (n < 4) throw parse_error("polygon needs at least 4 vertices");
  std::vector<Edge> diagonals;
  if (j.contains("diagonals")) {
    for (const auto& d : j["diagonals"]) {
      if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
        throw parse_error("each diagonal is a pair of vertices");
      diagonals.push_back(make_edge(d[0].get<int>(), d[1].get<int>()));
    }
  }
  LabeledTriangulation out{Triangulation(n, diagonals), {}};
  out.tri = Triangulation::with_default_labels(n, out.tri.diagonals(), out.names);
  if (seed_labels) return out;
  if (j.contains("edge_labels")) {
    for (const auto& [key, val] : j["edge_labels"].items()) {
      auto v = parse_ints(key, '-');
      if (v.size() != 2 || !val.is_string()) throw parse_error("edge label key must be 'i-j' with a string name");
      Edge e = make_edge(v[0], v[1]);
      if (!out.tri.is_edge(e)) throw parse_error("edge label for a non-edge " + key);
      out.tri.set_edge_label(e, out.names.even(val.get<std::string>()));
    }
  }
  if (j.contains("triangle_labels")) {
    for (const auto& [key, val] : j["triangle_labels"].items()) {
      auto v = parse_ints(key, '-');
      if (v.size() != 3 || !val.is_string()) throw parse_error("triangle label key must be 'i-j-k' with a string name");
      Tri t = make_tri(v[0], v[1], v[2]);
      if (!out.tri.is_triangle(t)) throw parse_error("triangle label for a non-face " + key);
      out.tri.set_triangle_label(t, out.names.odd(val.get<std::string>()));
    }
  }
  return out;
}

Json triangulation_json(const Triangulation& t, const Alphabet& a) {
  Json j;
  j["n"] = t.n();
  j["diagonals"] = Json::array();
  for (Edge d : t.diagonals()) j["diagonals"].push_back({d.first, d.second});
  j["edge_labels"] = Json::object();
  for (Edge e : t.edges()) j["edge_labels"][edge_key(e)] = a.even_name(t.edge_label(e));
  j["triangle_labels"] = Json::object();
  for (const Tri& f : t.triangles()) j["triangle_labels"][tri_key(f)] = a.odd_name(t.triangle_label(f));
  return j;
}

Arc parse_arc(const std::string& s, int n) {
  std::vector<int> v;
  try {
    v = parse_ints(s, ',');
  } catch (const Error&) {
    throw Error(ErrorKind::arc_invalid, "arc must be 'i,j'");
  }
  if (v.size() != 2) throw Error(ErrorKind::arc_invalid, "arc must be 'i,j'");
  for (int x : v)
    if (x < 0 || x >= n) throw Error(ErrorKind::arc_invalid, "arc endpoint out of range");
  if (v[0] == v[1]) throw Error(ErrorKind::arc_invalid, "arc endpoints coincide");
  return {v[0], v[1]};
}

const char* side_name(Side s) {
  static const char* names[] = {"S", "E", "N", "W"};
  return names[s];
}

Side parse_side(const std::string& s) {
  if (s == "S") return S;
  if (s == "E") return E;
  if (s == "N") return N;
  if (s == "W") return W;
  throw parse_error("side must be one of S, E, N, W");
}

LabeledSnake parse_snake(const Json& j, bool seed_labels) {
  if (!j.is_object()) throw parse_error("graph must be an object");
  LabeledSnake out;
  if (j.contains("tri")) {
    auto lt = parse_triangulation(j["tri"], seed_labels);
    const auto& a = j.at("arc");
    if (!a.is_array() || a.size() != 2) throw parse_error("arc must be a pair");
    Arc arc{a[0].get<int>(), a[1].get<int>()};
    if (arc.from < 0 || arc.to < 0 || arc.from >= lt.tri.n() || arc.to >= lt.tri.n() || arc.from == arc.to)
      throw Error(ErrorKind::arc_invalid, "arc endpoint out of range");
    ArcContext c = make_context(lt.tri, arc);
    out.graph = build_snake(c);
    out.names = lt.names;
    out.order = c.order;
    return out;
  }
  if (!j.contains("word") || !j["word"].is_string()) throw parse_error("graph needs a word or a tri/arc pair");
  std::string word = j["word"].get<std::string>();
  for (char ch : word)
    if (ch != 'R' && ch != 'U') throw parse_error("word letters must be R or U");
  if (!j.contains("tiles") || seed_labels) {
    out.graph = snake_from_word(word, out.names);
    return out;
  }
  const auto& ts = j["tiles"];
  if (!ts.is_array() || ts.size() != word.size() + 1) throw parse_error("tile count must be word length + 1");
  std::vector<Tile> tiles;
  std::vector<int> odd_seen;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Tile t;
    for (Side s : {S, E, N, W}) {
      auto key = side_name(s);
      if (ts[i].contains(key)) t.label[s] = out.names.even(ts[i][key].get<std::string>());
    }
    if (ts[i].contains("diagonal")) t.diagonal = out.names.even(ts[i]["diagonal"].get<std::string>());
    t.corner_bl = out.names.odd(ts[i].value("bl", "th" + std::to_string(i + 1)));
    t.corner_tr = out.names.odd(ts[i].value("tr", "th" + std::to_string(i + 2)));
    tiles.push_back(t);
  }
  out.graph = SnakeGraph(tiles, word);
  return out;
}

Json snake_json(const SnakeGraph& g, const Alphabet& a) {
  auto name = [&](int label) { return label == kUnit ? std::string("1") : a.even_name(label); };
  Json j;
  j["word"] = g.word();
  j["tiles"] = Json::array();
  for (const Tile& t : g.tiles()) {
    Json jt;
    for (Side s : {S, E, N, W}) jt[side_name(s)] = name(t.label[s]);
    jt["diagonal"] = name(t.diagonal);
    if (t.corner_bl >= 0) jt["bl"] = a.odd_name(t.corner_bl);
    if (t.corner_tr >= 0) jt["tr"] = a.odd_name(t.corner_tr);
    j["tiles"].push_back(jt);
  }
  return j;
}

Json cover_json(const DoubleDimerCover& m, const SnakeGraph& g) {
  Json j = Json::array();
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m[e] == 0) continue;
    auto [tile, side] = g.edges()[e].refs.front();
    j.push_back({{"tile", tile}, {"side", side_name(side)}, {"mult", m[e]}});
  }
  return j;
}

DoubleDimerCover parse_cover(const Json& j, const SnakeGraph& g) {
  if (!j.is_array()) throw parse_error("cover must be an array of {tile, side, mult}");
  DoubleDimerCover m(g.edges().size(), 0);
  for (const auto& d : j) {
    int tile = d.at("tile").get<int>();
    if (tile < 1 || tile > g.size()) throw parse_error("cover tile out of range");
    int mult = d.value("mult", 1);
    if (mult < 1 || mult > 2) throw parse_error("multiplicity must be 1 or 2");
    m[g.edge_id(tile, parse_side(d.at("side").get<std::string>()))] += mult;
  }
  if (!is_double_dimer_cover(g, m)) throw parse_error("not a double dimer cover");
  return m;
}

Json term_json(const SuperTerm& t, const Alphabet& a) {
  Json j;
  j["coeff"] = t.coeff.get_str();
  j["even"] = Json::array();
  for (auto [g, e] : t.even.factors()) j["even"].push_back({a.even_name(g), exponent_text(e)});
  j["odd"] = Json::array();
  for (int g : t.odd) j["odd"].push_back(a.odd_name(g));
  return j;
}

Json poly_json(const SuperPoly& p, const Alphabet& a) {
  Json j;
  j["text"] = to_text(p, a);
  j["terms"] = Json::array();
  for (const auto& t : p.term_list()) j["terms"].push_back(term_json(t, a));
  return j;
}

}  // namespace sl
