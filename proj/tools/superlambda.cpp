// Command-line front end: expansions, snake graphs, covers, paths, lattices,
// verification, super Fibonacci tables and drawings.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "superlambda/io.hpp"
#include "superlambda/lattice.hpp"
#include "superlambda/oracle.hpp"
#include "superlambda/recurrences.hpp"
#include "superlambda/render.hpp"
#include "superlambda/superfib.hpp"
#include "superlambda/tpaths.hpp"
#include "superlambda/verify.hpp"

namespace {

using namespace sl;

constexpr int kExitParse = 2;
constexpr int kExitArc = 3;
constexpr int kExitShape = 4;
constexpr int kExitVerify = 5;

struct Globals {
  std::string format = "text";
  bool seed_labels = false;
  bool json() const { return format == "json"; }
};

struct Input {
  std::string tri;
  std::string arc;
  std::string graph;
};

struct TriArc {
  LabeledTriangulation lt;
  Arc arc;
};

TriArc load_tri_arc(const Input& in, const Globals& g) {
  if (in.tri.empty()) throw Error(ErrorKind::parse, "--tri is required");
  if (in.arc.empty()) throw Error(ErrorKind::arc_invalid, "--arc is required");
  TriArc out{parse_triangulation(load_json(in.tri), g.seed_labels), {}};
  out.arc = parse_arc(in.arc, out.lt.tri.n());
  return out;
}

LabeledSnake load_snake(const Input& in, const Globals& g) {
  if (!in.graph.empty()) return parse_snake(load_json(in.graph), g.seed_labels);
  TriArc ta = load_tri_arc(in, g);
  ArcContext c = make_context(ta.lt.tri, ta.arc);
  return {build_snake(c), ta.lt.names, c.order};
}

void add_tri_arc(CLI::App* cmd, Input& in) {
  cmd->add_option("--tri", in.tri, "triangulation JSON (inline or file)");
  cmd->add_option("--arc", in.arc, "arc as i,j");
}

void add_graph(CLI::App* cmd, Input& in) {
  add_tri_arc(cmd, in);
  cmd->add_option("--graph", in.graph, "snake graph JSON (inline or file)");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string tile_text(const Tile& t, const Alphabet& a) {
  auto name = [&](int l) { return l == kUnit ? std::string("1") : a.even_name(l); };
  std::ostringstream os;
  os << "tile " << t.index << ": S=" << name(t.label[S]) << " E=" << name(t.label[E]) << " N=" << name(t.label[N])
     << " W=" << name(t.label[W]) << " diagonal=" << name(t.diagonal);
  if (t.corner_bl >= 0) os << " bl=" << a.odd_name(t.corner_bl);
  if (t.corner_tr >= 0) os << " tr=" << a.odd_name(t.corner_tr);
  return os.str();
}

void show_snake(const SnakeGraph& g, const Alphabet& a, const Globals& gl) {
  if (gl.json()) {
    print(snake_json(g, a));
    return;
  }
  std::cout << "word: " << (g.word().empty() ? "(empty)" : g.word()) << "\n";
  for (const Tile& t : g.tiles()) std::cout << tile_text(t, a) << "\n";
}

std::string cover_text(const DoubleDimerCover& m, const SnakeGraph& g) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m[e] == 0) continue;
    auto [tile, side] = g.edges()[e].refs.front();
    os << (first ? "" : " ") << tile << side_name(side) << (m[e] == 2 ? "x2" : "");
    first = false;
  }
  return os.str();
}

std::string class_name(const Classification& c) { return c.R ? "R" : c.T ? "T" : "tr"; }

int cmd_expand(const Input& in, const std::string& method, const Globals& g) {
  TriArc ta = load_tri_arc(in, g);
  const Alphabet& a = ta.lt.names;
  std::vector<std::pair<std::string, SuperPoly>> rows;
  bool agree = true;
  if (method == "all") {
    RouteResults r = four_routes(ta.lt.tri, ta.arc);
    rows = {{"dimer", r.dimer}, {"tpath", r.tpath}, {"lattice", r.lattice}, {"flip", r.flip}};
    agree = r.agree();
  } else {
    Edge chord = make_edge(ta.arc.from, ta.arc.to);
    SuperPoly p;
    if (ta.lt.tri.is_edge(chord))
      p = SuperPoly::even_gen(ta.lt.tri.edge_label(chord));
    else if (method == "dimer")
      p = lambda_expansion(ta.lt.tri, ta.arc);
    else if (method == "tpath")
      p = tpath_expansion(ta.lt.tri, ta.arc);
    else if (method == "lattice")
      p = lattice_expansion(ta.lt.tri, ta.arc);
    else
      p = lambda_via_flips(ta.lt.tri, ta.arc);
    rows = {{method, p}};
  }
  if (g.json()) {
    Json j;
    j["arc"] = {ta.arc.from, ta.arc.to};
    for (const auto& [name, p] : rows) j["routes"][name] = poly_json(p, a);
    j["agree"] = agree;
    print(j);
  } else if (rows.size() == 1) {
    std::cout << to_text(rows[0].second, a) << "\n";
  } else {
    for (const auto& [name, p] : rows) std::cout << std::left << std::setw(8) << name << to_text(p, a) << "\n";
    std::cout << "agree: " << (agree ? "yes" : "NO") << "\n";
  }
  return agree ? 0 : kExitVerify;
}

int cmd_mu(const Input& in, const std::string& quad, const Globals& g) {
  TriArc ta = load_tri_arc(in, g);
  ArcContext c = make_context(ta.lt.tri, ta.arc, quad == "right" ? QuadCenter::right : QuadCenter::left);
  MuExpansion mu = mu_expansion(c);
  SuperPoly flips = mu_via_flips(c);
  bool agree = mu.value == flips;
  const Alphabet& a = ta.lt.names;
  if (g.json()) {
    Json j;
    j["arc"] = {ta.arc.from, ta.arc.to};
    j["top_fan_left"] = mu.top_fan_left;
    j["top_center"] = c.to_original[mu.top_center];
    j["expansion"] = poly_json(mu.value, a);
    j["flip"] = poly_json(flips, a);
    j["agree"] = agree;
    print(j);
  } else {
    std::cout << "top fan center " << c.to_original[mu.top_center] << (mu.top_fan_left ? " (left)" : " (right)")
              << "\n";
    std::cout << "expansion " << to_text(mu.value, a) << "\n";
    std::cout << "flip      " << to_text(flips, a) << "\n";
    std::cout << "agree: " << (agree ? "yes" : "NO") << "\n";
  }
  return agree ? 0 : kExitVerify;
}

int cmd_dimers(const Input& in, bool single, const Globals& g) {
  LabeledSnake s = load_snake(in, g);
  Json out = Json::array();
  if (single) {
    int i = 0;
    for (const auto& m : enumerate_dimers(s.graph)) {
      DoubleDimerCover d = superpose(s.graph, m, m);
      SuperTerm w = dimer_weight(m, s.graph);
      if (g.json())
        out.push_back({{"cover", cover_json(d, s.graph)}, {"weight", to_text(w, s.names)}});
      else
        std::cout << "#" << ++i << "  " << to_text(w, s.names) << "  : " << cover_text(d, s.graph) << "\n";
    }
  } else {
    int i = 0;
    for (const auto& m : enumerate_double_dimers(s.graph)) {
      SuperTerm w = weight(m, s.graph, s.order);
      std::string cls = class_name(classify(m, s.graph));
      if (g.json())
        out.push_back({{"cover", cover_json(m, s.graph)}, {"weight", to_text(w, s.names)}, {"class", cls}});
      else
        std::cout << "#" << ++i << " [" << cls << "]  " << to_text(w, s.names) << "  : " << cover_text(m, s.graph)
                  << "\n";
    }
  }
  if (g.json()) print(out);
  return 0;
}

int cmd_tpaths(const Input& in, bool untwisted, const Globals& g) {
  TriArc ta = load_tri_arc(in, g);
  ArcContext c = make_context(ta.lt.tri, ta.arc);
  TwistedAuxGraph aux = build_aux(c);
  Json out = Json::array();
  for (const TPath& p : enumerate_tpaths(aux)) {
    TPath q = untwisted ? untwist(aux, p) : p;
    SuperTerm w = untwisted ? original_weight(aux, q) : twt(aux, q);
    std::string text = path_text(aux, q);
    if (g.json()) {
      Json steps = Json::array();
      for (const TStep& s : q.steps) {
        static const char* kinds[] = {"edge", "sigma_a", "sigma_b", "sigma", "tau"};
        steps.push_back(kinds[static_cast<int>(s.kind)]);
      }
      out.push_back({{"path", text}, {"steps", steps}, {"weight", term_json(w, ta.lt.names)},
                     {"weight_text", to_text(w, ta.lt.names)}, {"super", has_super_step(p)}});
    } else {
      std::cout << text << "   " << to_text(w, ta.lt.names) << "\n";
    }
  }
  if (g.json()) print(out);
  return 0;
}

std::string labeling_text(const TileLabeling& x) {
  std::string s;
  for (int v : x) s += static_cast<char>('0' + v);
  return s;
}

int cmd_lattice(const Input& in, bool ideals, bool dot, const Globals& g) {
  LabeledSnake s = load_snake(in, g);
  auto xs = labelings(s.graph);
  if (dot) {
    std::cout << hasse_dot(xs);
    return 0;
  }
  auto covers = labeling_covers(xs);
  if (g.json()) {
    Json j;
    j["word"] = s.graph.word();
    j["labelings"] = Json::array();
    for (const auto& x : xs) {
      Json row = {{"labels", x}, {"weight", to_text(doublepath_weight(labeling_to_doublepath(x, s.graph), s.graph, s.order), s.names)}};
      if (ideals) row["ideal"] = labeling_to_ideal(x);
      j["labelings"].push_back(row);
    }
    j["cover_relations"] = covers;
    j["ideal_count"] = order_ideals(product_with_chain(tile_poset(s.graph))).size();
    print(j);
    return 0;
  }
  std::cout << "word: " << s.graph.word() << "\n" << xs.size() << " labelings, " << covers.size() << " cover relations\n";
  for (const auto& x : xs) {
    std::cout << labeling_text(x) << "  "
              << to_text(doublepath_weight(labeling_to_doublepath(x, s.graph), s.graph, s.order), s.names);
    if (ideals) {
      Poset pp = product_with_chain(tile_poset(s.graph));
      OrderIdeal id = labeling_to_ideal(x);
      std::cout << "  {";
      bool first = true;
      for (int e = 0; e < pp.size; ++e)
        if (id[e]) {
          std::cout << (first ? "" : ",") << pp.names[e];
          first = false;
        }
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_poset(const Input& in, bool dot, const Globals& g) {
  LabeledSnake s = load_snake(in, g);
  Poset p = tile_poset(s.graph);
  Poset pp = product_with_chain(p);
  if (dot) {
    std::cout << "digraph P {\n  rankdir=BT;\n";
    for (int i = 0; i < pp.size; ++i) std::cout << "  n" << i << " [label=\"" << pp.names[i] << "\"];\n";
    for (auto [a, b] : pp.covers) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
    return 0;
  }
  IsoWitness w = iso_check(s.graph);
  if (g.json()) {
    Json j;
    j["word"] = s.graph.word();
    j["P_covers"] = p.covers;
    j["PxC_covers"] = pp.covers;
    j["names"] = pp.names;
    j["ideals"] = w.ideals;
    j["labelings"] = w.labelings;
    j["cover_relations"] = w.cover_relations;
    j["isomorphic"] = true;
    print(j);
    return 0;
  }
  std::cout << "P(G): " << p.size << " elements, covers";
  for (auto [a, b] : p.covers) std::cout << " " << p.names[a] << "<" << p.names[b];
  std::cout << "\nP(G) x {0<1}: " << pp.size << " elements, " << w.ideals << " order ideals\n";
  std::cout << "labelings: " << w.labelings << ", matching cover relations: " << w.cover_relations << "\n";
  std::cout << "isomorphic: yes\n";
  return 0;
}

int cmd_verify(const Input& in, int nmax, const Globals& g) {
  if (!in.tri.empty()) {
    TriArc ta = load_tri_arc(in, g);
    RouteResults r = four_routes(ta.lt.tri, ta.arc);
    bool ok = r.agree();
    bool bij = true, lemmas = true;
    if (!ta.lt.tri.is_edge(make_edge(ta.arc.from, ta.arc.to))) {
      ArcContext c = make_context(ta.lt.tri, ta.arc);
      bij = tpath_bijection_holds(c);
      SnakeGraph sg = build_snake(c);
      for (const LemmaCheck& l : {check_lemma1(sg, c.order), check_lemma2(sg, c.order), check_lemma3(sg, c.order),
                                  check_lemma4(sg, c.order)})
        lemmas = lemmas && (!l.applies || l.holds);
    }
    ok = ok && bij && lemmas;
    if (g.json()) {
      print({{"routes_agree", r.agree()}, {"bijection", bij}, {"recurrences", lemmas}, {"ok", ok},
             {"expansion", poly_json(r.dimer, ta.lt.names)}});
    } else {
      std::cout << "expansion: " << to_text(r.dimer, ta.lt.names) << "\n";
      std::cout << "routes agree: " << (r.agree() ? "yes" : "NO") << "\nbijection: " << (bij ? "yes" : "NO")
                << "\nrecurrences: " << (lemmas ? "yes" : "NO") << "\n";
    }
    return ok ? 0 : kExitVerify;
  }
  if (nmax < 4 || nmax > 10) throw Error(ErrorKind::parse, "nmax must lie in 4..10");
  VerifyOptions opt;
  opt.nmax = nmax;
  VerifyReport r = verify_universe(opt);
  if (g.json()) {
    print({{"nmax", nmax},
           {"triangulations", r.triangulations},
           {"arcs", r.arcs},
           {"route_failures", r.route_failures},
           {"recurrence_checks", r.lemma_applications},
           {"recurrence_failures", r.lemma_failures},
           {"bijection_failures", r.bijection_failures},
           {"lattice_failures", r.lattice_failures},
           {"messages", r.messages},
           {"ok", r.ok()}});
  } else {
    std::cout << "triangulations (up to rotation): " << r.triangulations << "\narcs: " << r.arcs
              << "\nroute failures: " << r.route_failures << "\nrecurrence checks: " << r.lemma_applications
              << " (failures " << r.lemma_failures << ")\nbijection failures: " << r.bijection_failures
              << "\nlattice failures: " << r.lattice_failures << "\n";
    for (const auto& m : r.messages) std::cout << "  " << m << "\n";
    std::cout << std::fixed << std::setprecision(2) << "time: " << r.seconds << " s\n"
              << (r.ok() ? "all checks passed" : "VERIFICATION FAILED") << "\n";
  }
  return r.ok() ? 0 : kExitVerify;
}

int cmd_fib(int upto, bool symbolic, bool csv, bool w, const Globals& g) {
  if (upto < 1) throw Error(ErrorKind::parse, "--upto must be positive");
  FibAlphabet f = fib_alphabet(symbolic);
  struct Row {
    int m;
    ClosedForms c;
    SuperNumber p;
  };
  std::vector<Row> rows;
  for (int m = 1; m <= upto; ++m) rows.push_back({m, closed_forms(m), partition_transfer(Gm(m, f), f)});
  int z_upto = (upto + 5) / 2;
  RecurrenceReport checks = symbolic ? symbolic_checks(z_upto) : recurrence_checks(upto, z_upto);
  std::vector<WRow> ws;
  if (w) ws = w_exploration((upto + 4) / 2, symbolic);

  if (csv) {
    std::cout << "m,x_m,y_m,g_m,p_even,p_eps\n";
    for (const Row& r : rows)
      std::cout << r.m << "," << r.c.x << "," << r.c.y_gsum << "," << r.c.g << ",\"" << to_text(r.p.even_part(), f.names)
                << "\",\"" << to_text(r.p.eps_part(), f.names) << "\"\n";
    return checks.all_ok() ? 0 : kExitVerify;
  }
  if (g.json()) {
    Json j;
    j["rows"] = Json::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"m", r.m},
                           {"x_m", r.c.x.get_str()},
                           {"y_m", r.c.y_gsum.get_str()},
                           {"g_m", r.c.g.get_str()},
                           {"p_even", to_text(r.p.even_part(), f.names)},
                           {"p_eps", to_text(r.p.eps_part(), f.names)}});
    j["checks"] = Json::array();
    for (const auto& l : checks.lines) j["checks"].push_back({{"name", l.name}, {"index", l.index}, {"ok", l.ok}});
    j["all_ok"] = checks.all_ok();
    if (w) {
      j["conjecture"] = "w_n = p_{2n-4} as peripheral arc lengths; exploratory, not asserted";
      for (const auto& r : ws)
        j["w"].push_back({{"n", r.n}, {"w", to_text(r.w, f.names)}, {"satisfies_z_relation", r.quadratic}});
    }
    print(j);
    return checks.all_ok() ? 0 : kExitVerify;
  }
  std::cout << std::setw(4) << "m" << std::setw(14) << "x_m" << std::setw(14) << "y_m" << std::setw(14) << "g_m"
            << "   p_m\n";
  for (const Row& r : rows)
    std::cout << std::setw(4) << r.m << std::setw(14) << r.c.x << std::setw(14) << r.c.y_gsum << std::setw(14) << r.c.g
              << "   " << to_text(r.p, f.names) << "\n";
  std::cout << "checks: " << checks.lines.size() - checks.failures() << "/" << checks.lines.size() << " passed\n";
  for (const auto& l : checks.lines)
    if (!l.ok) std::cout << "  FAILED " << l.name << " at " << l.index << "\n";
  if (w) {
    std::cout << "\n*** CONJECTURE (exploratory, not verified): w_n = p_{2n-4} ***\n";
    for (const auto& r : ws)
      std::cout << "w_" << r.n << " = " << to_text(r.w, f.names)
                << (r.n >= 4 ? (r.quadratic ? "   satisfies the z_n relation" : "   does not satisfy the z_n relation") : "")
                << "\n";
  }
  return checks.all_ok() ? 0 : kExitVerify;
}

int cmd_flip_trace(const Input& in, const Globals& g) {
  TriArc ta = load_tri_arc(in, g);
  const Alphabet& a = ta.lt.names;
  if (ta.lt.tri.is_edge(make_edge(ta.arc.from, ta.arc.to)))
    throw Error(ErrorKind::arc_invalid, "arc is already an edge of the triangulation");
  ArcContext c = make_context(ta.lt.tri, ta.arc);
  FlipState s = FlipState::initial(c);
  std::vector<FlipStep> trace;
  FlipState end = flip_to_arc(s, c.arc, &trace);
  auto orig = [&](Edge e) {
    return std::to_string(c.to_original[e.first]) + "-" + std::to_string(c.to_original[e.second]);
  };
  FlipState cur = s;
  Json steps = Json::array();
  for (const FlipStep& st : trace) {
    cur = flip(cur, st.flipped);
    SuperPoly lam = cur.lambda(st.created);
    Json row = {{"flipped", orig(st.flipped)}, {"created", orig(st.created)}, {"lambda", poly_json(lam, a)}};
    Json thetas = Json::object();
    for (const Tri& t : cur.tri().triangles_on(st.created)) {
      std::string key = std::to_string(c.to_original[t[0]]) + "-" + std::to_string(c.to_original[t[1]]) + "-" +
                        std::to_string(c.to_original[t[2]]);
      thetas[key] = poly_json(cur.scaled_mu(t), a);
    }
    row["scaled_mu"] = thetas;
    if (g.json()) {
      steps.push_back(row);
    } else {
      std::cout << "flip " << orig(st.flipped) << " -> " << orig(st.created) << "\n  lambda = " << to_text(lam, a)
                << "\n";
      for (const auto& [k, v] : thetas.items()) std::cout << "  Theta(" << k << ") = " << v["text"].get<std::string>() << "\n";
    }
  }
  SuperPoly fin = end.lambda(make_edge(c.arc.from, c.arc.to));
  if (g.json())
    print({{"steps", steps}, {"lambda", poly_json(fin, a)}});
  else
    std::cout << "lambda(" << ta.arc.from << "," << ta.arc.to << ") = " << to_text(fin, a) << "\n";
  return 0;
}

int cmd_render(const Input& in, const std::string& cover_src, bool tikz, const Globals& g) {
  LabeledSnake s = load_snake(in, g);
  DoubleDimerCover m;
  const DoubleDimerCover* cover = nullptr;
  if (!cover_src.empty()) {
    Json j = load_json(cover_src);
    if (j.is_object() && j.contains("cover")) j = j["cover"];
    m = parse_cover(j, s.graph);
    cover = &m;
  }
  std::cout << (tikz ? render_tikz(s.graph, s.names, cover) : render_svg(s.graph, s.names, cover));
  return 0;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
      return kExitParse;
    case ErrorKind::arc_invalid:
    case ErrorKind::same_vertex:
    case ErrorKind::no_crossing:
    case ErrorKind::not_internal:
      return kExitArc;
    case ErrorKind::shape_unsupported:
      return kExitShape;
    case ErrorKind::iso_failure:
      return kExitVerify;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super lambda-length expansions for triangulated polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--seed-labels", g.seed_labels, "ignore input labels and use x1.., th1..");

  Input in;
  std::string method = "all", quad = "left", cover;
  int nmax = 6, upto = 10;
  bool untwisted = false, single = false, ideals = false, hasse = false, dot = false;
  bool symbolic = false, csv = false, w = false, svg = false, tikz = false;

  auto* expand = app.add_subcommand("expand", "expand lambda(arc) by one or all routes");
  add_tri_arc(expand, in);
  expand->add_option("--method", method)->check(CLI::IsMember({"dimer", "tpath", "lattice", "flip", "all"}));

  auto* mu = app.add_subcommand("mu", "expansion of sqrt(df) times the mu-invariant after the flips");
  add_tri_arc(mu, in);
  mu->add_option("--quad-center", quad, "fan center side for a single crossing")
      ->check(CLI::IsMember({"left", "right"}));

  auto* snake = app.add_subcommand("snake", "snake graph of an arc");
  add_graph(snake, in);
  auto* dual_cmd = app.add_subcommand("dual", "dual snake graph");
  add_graph(dual_cmd, in);

  auto* dimers = app.add_subcommand("dimers", "dimer covers");
  dimers->require_subcommand(1);
  auto* dimers_list = dimers->add_subcommand("list", "list double dimer covers with weights");
  add_graph(dimers_list, in);
  dimers_list->add_flag("--single", single, "list ordinary dimer covers instead");

  auto* tpaths = app.add_subcommand("tpaths", "super T-paths");
  tpaths->require_subcommand(1);
  auto* tpaths_list = tpaths->add_subcommand("list", "list twisted super T-paths with weights");
  add_tri_arc(tpaths_list, in);
  tpaths_list->add_flag("--untwisted", untwisted, "show the original-style paths");

  auto* lattice = app.add_subcommand("lattice", "tile labelings of a graph and their lattice");
  add_graph(lattice, in);
  lattice->add_flag("--ideals", ideals, "show the order ideal of each labeling");
  lattice->add_flag("--hasse-dot", hasse, "emit the Hasse diagram as DOT");

  auto* poset = app.add_subcommand("poset", "tile poset and the ideal isomorphism");
  add_graph(poset, in);
  poset->add_flag("--dot", dot, "emit the product poset as DOT");

  auto* verify = app.add_subcommand("verify", "cross-check all routes");
  add_tri_arc(verify, in);
  verify->add_option("--nmax", nmax, "largest polygon for the exhaustive run");

  auto* fib = app.add_subcommand("fib", "super Fibonacci table and checks");
  fib->add_option("--upto", upto, "largest m");
  fib->add_flag("--symbolic", symbolic, "seed with variables a, b");
  fib->add_flag("--csv", csv, "CSV table");
  fib->add_flag("--w", w, "exploratory even-indexed values");

  auto* trace = app.add_subcommand("flip-trace", "state after each flip towards the arc");
  add_tri_arc(trace, in);

  auto* render = app.add_subcommand("render", "draw a snake graph and optional cover");
  add_graph(render, in);
  render->add_option("--cover", cover, "cover JSON (inline or file)");
  render->add_flag("--svg", svg, "SVG output (default)");
  render->add_flag("--tikz", tikz, "TikZ output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*expand) return cmd_expand(in, method, g);
    if (*mu) return cmd_mu(in, quad, g);
    if (*snake || *dual_cmd) {
      LabeledSnake s = load_snake(in, g);
      show_snake(*dual_cmd ? dual(s.graph) : s.graph, s.names, g);
      return 0;
    }
    if (*dimers_list) return cmd_dimers(in, single, g);
    if (*tpaths_list) return cmd_tpaths(in, untwisted, g);
    if (*lattice) return cmd_lattice(in, ideals, hasse, g);
    if (*poset) return cmd_poset(in, dot, g);
    if (*verify) return cmd_verify(in, nmax, g);
    if (*fib) return cmd_fib(upto, symbolic, csv, w, g);
    if (*trace) return cmd_flip_trace(in, g);
    if (*render) return cmd_render(in, cover, tikz && !svg, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
