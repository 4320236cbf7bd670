#include "superlambda/dimers.hpp"

#include <algorithm>
#include <set>

namespace sl {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const SnakeGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices());
  const auto& es = g.edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    adj[es[i].u].push_back({es[i].v, i});
    adj[es[i].v].push_back({es[i].u, i});
  }
  return adj;
}

void match_rec(const std::vector<std::vector<std::pair<int, int>>>& adj, std::vector<bool>& used,
               std::vector<int>& chosen, std::vector<DimerCover>& out) {
  int v = -1;
  for (int i = 0; i < static_cast<int>(used.size()); ++i)
    if (!used[i]) {
      v = i;
      break;
    }
  if (v < 0) {
    DimerCover m = chosen;
    std::sort(m.begin(), m.end());
    out.push_back(m);
    return;
  }
  used[v] = true;
  for (const auto& [w, e] : adj[v]) {
    if (used[w]) continue;
    used[w] = true;
    chosen.push_back(e);
    match_rec(adj, used, chosen, out);
    chosen.pop_back();
    used[w] = false;
  }
  used[v] = false;
}

}  // namespace

std::vector<DimerCover> enumerate_dimers(const SnakeGraph& g) {
  auto adj = adjacency(g);
  std::vector<bool> used(g.num_vertices(), false);
  std::vector<int> chosen;
  std::vector<DimerCover> out;
  match_rec(adj, used, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

DoubleDimerCover superpose(const SnakeGraph& g, const DimerCover& a, const DimerCover& b) {
  DoubleDimerCover m(g.edges().size(), 0);
  for (int e : a) ++m[e];
  for (int e : b) ++m[e];
  return m;
}

std::vector<DoubleDimerCover> enumerate_double_dimers(const SnakeGraph& g) {
  auto singles = enumerate_dimers(g);
  std::set<DoubleDimerCover> seen;
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i; j < singles.size(); ++j) seen.insert(superpose(g, singles[i], singles[j]));
  return {seen.begin(), seen.end()};
}

bool is_double_dimer_cover(const SnakeGraph& g, const DoubleDimerCover& m) {
  if (m.size() != g.edges().size()) return false;
  std::vector<int> deg(g.num_vertices(), 0);
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (m[e] > 2) return false;
    deg[g.edges()[e].u] += m[e];
    deg[g.edges()[e].v] += m[e];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

std::vector<Cycle> cycles(const SnakeGraph& g, const DoubleDimerCover& m) {
  const auto& es = g.edges();
  std::vector<std::vector<int>> inc(g.num_vertices());
  for (int e = 0; e < static_cast<int>(m.size()); ++e)
    if (m[e] == 1) {
      inc[es[e].u].push_back(e);
      inc[es[e].v].push_back(e);
    }
  std::vector<bool> seen_edge(m.size(), false);
  std::vector<Cycle> out;
  for (int start = 0; start < static_cast<int>(m.size()); ++start) {
    if (m[start] != 1 || seen_edge[start]) continue;
    Cycle c;
    std::set<int> verts;
    std::vector<int> stack{start};
    seen_edge[start] = true;
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      c.edges.push_back(e);
      for (int v : {es[e].u, es[e].v}) {
        verts.insert(v);
        for (int f : inc[v])
          if (!seen_edge[f]) {
            seen_edge[f] = true;
            stack.push_back(f);
          }
      }
    }
    std::sort(c.edges.begin(), c.edges.end());
    c.first_tile = g.size() + 1;
    c.last_tile = 0;
    for (int t = 1; t <= g.size(); ++t) {
      bool all = true;
      for (int k = 0; k < 4; ++k) all = all && verts.count(g.corner_vertex(t, static_cast<Corner>(k)));
      if (all) {
        c.first_tile = std::min(c.first_tile, t);
        c.last_tile = std::max(c.last_tile, t);
      }
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.first_tile < b.first_tile; });
  return out;
}

Classification classify(const DoubleDimerCover& m, const SnakeGraph& g) {
  int last = g.size();
  int top = m[g.edge_id(last, N)];
  int right = m[g.edge_id(last, E)];
  Classification c;
  c.R = right == 2;
  c.T = top == 2;
  c.tr = top == 1 && right == 1;
  return c;
}

SuperTerm weight(const DoubleDimerCover& m, const SnakeGraph& g, const PositiveOrder& order) {
  std::vector<EvenMonomial::Factor> f;
  for (std::size_t e = 0; e < m.size(); ++e) {
    int label = g.edges()[e].label;
    if (m[e] > 0 && label != kUnit) f.push_back({label, m[e]});
  }
  std::vector<int> odd;
  for (const Cycle& c : cycles(g, m)) {
    odd.push_back(g.tile(c.first_tile).corner_bl);
    odd.push_back(g.tile(c.last_tile).corner_tr);
  }
  // Odd factors are written in the positive order with coefficient +1.
  NormalizedWord nw = normalize_odd(odd, order);
  return {Rational(nw.sign == 0 ? 0 : 1), EvenMonomial::from_factors(f), nw.word};
}

SuperTerm dimer_weight(const DimerCover& m, const SnakeGraph& g) {
  std::vector<EvenMonomial::Factor> f;
  for (int e : m)
    if (g.edges()[e].label != kUnit) f.push_back({g.edges()[e].label, 2});
  return {Rational(1), EvenMonomial::from_factors(f), {}};
}

SuperPoly weight_sum(const SnakeGraph& g, const PositiveOrder& order, const CoverFilter& keep) {
  SuperPoly sum;
  for (const auto& m : enumerate_double_dimers(g))
    if (!keep || keep(m)) sum.add_term(weight(m, g, order));
  return sum;
}

SuperPoly lambda_expansion(const ArcContext& c) {
  SnakeGraph g = build_snake(c);
  return divide_by_monomial(weight_sum(g, c.order), c.cross());
}

SuperPoly lambda_expansion(const Triangulation& t, Arc arc) {
  Edge chord = make_edge(arc.from, arc.to);
  if (arc.from != arc.to && t.is_edge(chord)) return SuperPoly::even_gen(t.edge_label(chord));
  return lambda_expansion(make_context(t, arc));
}

MuExpansion mu_expansion(const ArcContext& c) {
  MuExpansion out;
  int n = c.tri.n();
  int k = c.k();
  int j = c.fans.centers[c.fans.centers.size() - 2];
  out.top_center = j;
  out.top_fan_left = ccw(n, c.arc.from, c.arc.to, j);
  Tri last = c.faces.back();
  if (std::find(last.begin(), last.end(), j) == last.end())
    throw Error(ErrorKind::shape_unsupported, "top fan center is not on the last triangle");
  Edge e = c.crossed.back();
  int other = e.first == j ? e.second : e.first;
  out.a_label = c.tri.edge_label(make_edge(j, c.arc.to));
  out.b_label = c.tri.edge_label(make_edge(other, c.arc.to));
  out.e_label = c.tri.edge_label(e);

  SnakeGraph g = build_snake(c);
  // Covers using the top edge of the last tile when the word ends in R, the
  // right edge otherwise. A single tile counts as ending in U, or in R when
  // its center lies right of the arc.
  bool use_top = k >= 2 ? g.word().back() == 'R' : !out.top_fan_left;
  int theta_n = c.theta_label(k + 1);
  // Each θ from a fan centered right of the arc flips the sign; a single fan
  // right of the arc carries one extra flip.
  std::set<int> right_thetas;
  for (const FanSegment& s : c.fans.segments)
    if (!ccw(n, c.arc.from, c.arc.to, s.center))
      for (int f : s.faces) right_thetas.insert(c.theta_label(f + 1));
  bool single_fan = c.fans.segments.size() == 1;
  SuperPoly sum;
  for (const auto& m : enumerate_double_dimers(g)) {
    Classification cl = classify(m, g);
    if (!(use_top ? cl.t() : cl.r())) continue;
    SuperTerm t = toggle(weight(m, g, c.order), theta_n, c.order);
    int flips = single_fan && !out.top_fan_left ? 1 : 0;
    for (int x : t.odd) flips += static_cast<int>(right_thetas.count(x));
    if (flips % 2) t.coeff = -t.coeff;
    sum.add_term(t);
  }
  EvenMonomial scale = EvenMonomial::gen(out.e_label, 1) / EvenMonomial::gen(out.b_label, 1);
  out.value = divide_by_monomial(sum.times_monomial(scale), c.cross());
  return out;
}

MuExpansion mu_expansion(const Triangulation& t, Arc arc) { return mu_expansion(make_context(t, arc)); }

}  // namespace sl
