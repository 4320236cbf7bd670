#include "superlambda/tpaths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "superlambda/errors.hpp"

namespace sl {

namespace {

int other_end(Edge e, int v) { return e.first == v ? e.second : e.first; }

// Identity of a graph edge for the distinctness axiom.
struct EdgeKey {
  StepKind kind;
  int p, q;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

EdgeKey key_of(const TStep& s) {
  switch (s.kind) {
    case StepKind::edge: {
      Edge e = make_edge(s.from, s.to);
      return {s.kind, e.first, e.second};
    }
    case StepKind::tau:
      return {s.kind, s.face, s.face_to};
    default:
      return {s.kind, s.face, 0};
  }
}

// Position along the arc: x_m crosses at 2m, face f (0-based) sits at 2f+1.
int diagonal_position(const ArcContext& c, Edge e) {
  for (int m = 0; m < c.k(); ++m)
    if (c.crossed[m] == e) return 2 * (m + 1);
  return -1;
}

// Even monomial √(s1·s2/opp) (twisted σ) or √(opp/(s1·s2)) (original σ) for the
// face and its vertex v.
EvenMonomial sigma_factor(const ArcContext& c, int face, int v, bool twisted) {
  const Tri& t = c.faces[face];
  EvenMonomial adj, opp;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Edge e = make_edge(t[i], t[j]);
      EvenMonomial g = EvenMonomial::gen(c.tri.edge_label(e), 1);
      if (t[i] == v || t[j] == v)
        adj = adj * g;
      else
        opp = opp * g;
    }
  return twisted ? adj / opp : opp / adj;
}

bool is_edge_step(const TStep& s, int from, int to) {
  return s.kind == StepKind::edge && s.from == from && s.to == to;
}

}  // namespace

std::vector<int> TPath::vertices() const {
  std::vector<int> v;
  if (steps.empty()) return v;
  v.push_back(steps.front().from);
  for (const TStep& s : steps) v.push_back(s.to);
  return v;
}

TwistedAuxGraph build_aux(const ArcContext& c) {
  TwistedAuxGraph g;
  g.ctx = c;
  int k = c.k();
  for (int f = 0; f <= k; ++f) {
    AuxFace af;
    af.center = c.face_center[f];
    af.a_vertex = f == 0 ? c.arc.from : other_end(c.crossed[f - 1], af.center);
    af.b_vertex = f == k ? c.arc.to : other_end(c.crossed[f], af.center);
    g.faces.push_back(af);
  }
  return g;
}

TPathEnumeration enumerate_tpaths_detailed(const TwistedAuxGraph& g) {
  const ArcContext& c = g.ctx;
  int n = g.n();
  int nf = static_cast<int>(g.faces.size());
  std::vector<std::vector<int>> nbr(n);
  for (const Edge& e : c.tri.edges()) {
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  TPathEnumeration out;
  std::vector<TStep> steps;
  std::set<EdgeKey> used;

  std::function<void(int, int)> rec = [&](int node, int last_pos) {
    int i = static_cast<int>(steps.size()) + 1;  // index of the next step
    bool odd = i % 2 == 1;
    if (node == c.arc.to && !odd) {
      ++out.raw_count;
      TPath p{steps, true};
      if (satisfies_axioms(g, p)) out.paths.push_back(p);
    }
    auto take = [&](const TStep& s, int next_pos) {
      EdgeKey key = key_of(s);
      if (used.count(key)) return;
      used.insert(key);
      steps.push_back(s);
      rec(s.to, next_pos);
      steps.pop_back();
      used.erase(key);
    };
    if (node < n) {
      for (int w : nbr[node]) {
        int pos = diagonal_position(c, make_edge(node, w));
        if (pos < 0 && !odd) continue;  // even steps cross the arc
        if (pos >= 0 && pos <= last_pos) continue;
        take({StepKind::edge, node, w}, pos >= 0 ? pos : last_pos);
      }
      if (odd)
        for (int f = 0; f < nf; ++f) {
          if (g.faces[f].a_vertex == node) take({StepKind::sigma_a, node, g.theta_node(f), f}, last_pos);
          if (g.faces[f].b_vertex == node) take({StepKind::sigma_b, node, g.theta_node(f), f}, last_pos);
        }
    } else {
      int f = node - n;
      if (odd) {
        take({StepKind::sigma_a, node, g.faces[f].a_vertex, f}, last_pos);
        take({StepKind::sigma_b, node, g.faces[f].b_vertex, f}, last_pos);
      } else if (2 * f + 1 > last_pos) {
        for (int h = f + 1; h < nf; ++h)
          take({StepKind::tau, node, g.theta_node(h), f, h}, 2 * h + 1);
      }
    }
  };
  rec(c.arc.from, 0);
  return out;
}

std::vector<TPath> enumerate_tpaths(const TwistedAuxGraph& g) {
  return enumerate_tpaths_detailed(g).paths;
}

bool satisfies_axioms(const TwistedAuxGraph& g, const TPath& p) {
  const ArcContext& c = g.ctx;
  int n = g.n();
  const auto& st = p.steps;
  int len = static_cast<int>(st.size());
  if (len % 2 == 0) return false;                                     // T4
  if (st.front().from != c.arc.from || st.back().to != c.arc.to) return false;  // T1
  std::set<EdgeKey> seen;
  int last_pos = 0;
  for (int i = 1; i <= len; ++i) {
    const TStep& s = st[i - 1];
    if (i > 1 && st[i - 2].to != s.from) return false;  // T2
    if (!seen.insert(key_of(s)).second) return false;   // T3
    bool odd = i % 2 == 1;
    int lo = -1, hi = -1;  // crossing interval, if the step crosses
    switch (s.kind) {
      case StepKind::edge: {
        if (s.from >= n || s.to >= n || !c.tri.is_edge(make_edge(s.from, s.to))) return false;
        lo = hi = diagonal_position(c, make_edge(s.from, s.to));
        break;
      }
      case StepKind::tau:
        if (s.face >= s.face_to) return false;
        if (p.twisted == odd) return false;  // T6' / T6
        if (p.twisted) {
          lo = 2 * s.face + 1;
          hi = 2 * s.face_to + 1;
        }
        break;
      case StepKind::sigma_a:
      case StepKind::sigma_b:
        if (!p.twisted || !odd) return false;  // T6'
        break;
      case StepKind::sigma:
        if (p.twisted || odd) return false;  // T6
        lo = hi = 2 * s.face + 1;
        break;
    }
    bool crosses = lo >= 0;
    if (!odd && !crosses) return false;  // T5' / T5
    if (crosses) {
      if (lo <= last_pos) return false;  // T7
      last_pos = hi;
    }
  }
  if (!p.twisted) return true;
  // Super step shape: σ^A_i τ_ij σ^B_j, σ^A entering, σ^B leaving.
  for (int i = 0; i < len; ++i) {
    const TStep& s = st[i];
    if (s.kind == StepKind::sigma_a && (s.from >= n || s.to != g.theta_node(s.face))) return false;
    if (s.kind == StepKind::sigma_b && (s.to >= n || s.from != g.theta_node(s.face))) return false;
    if (s.kind == StepKind::tau) {
      if (i == 0 || i + 1 >= len) return false;
      if (st[i - 1].kind != StepKind::sigma_a || st[i - 1].face != s.face) return false;
      if (st[i + 1].kind != StepKind::sigma_b || st[i + 1].face != s.face_to) return false;
    }
  }
  return true;
}

bool has_super_step(const TPath& p) {
  return std::any_of(p.steps.begin(), p.steps.end(),
                     [](const TStep& s) { return s.kind == StepKind::tau; });
}

namespace {

SuperTerm path_weight(const TwistedAuxGraph& g, const TPath& p, bool twisted) {
  const ArcContext& c = g.ctx;
  EvenMonomial even;
  std::vector<int> odd;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const TStep& s = p.steps[i];
    bool odd_index = i % 2 == 0;
    switch (s.kind) {
      case StepKind::edge: {
        EvenMonomial x = EvenMonomial::gen(c.tri.edge_label(make_edge(s.from, s.to)));
        even = odd_index ? even * x : even / x;
        break;
      }
      case StepKind::sigma_a:
        even = even * sigma_factor(c, s.face, g.faces[s.face].a_vertex, true);
        odd.push_back(c.theta_label(s.face + 1));
        break;
      case StepKind::sigma_b:
        even = even * sigma_factor(c, s.face, g.faces[s.face].b_vertex, true);
        odd.push_back(c.theta_label(s.face + 1));
        break;
      case StepKind::sigma:
        even = even * sigma_factor(c, s.face, g.faces[s.face].center, twisted);
        odd.push_back(c.theta_label(s.face + 1));
        break;
      case StepKind::tau:
        break;
    }
  }
  // Same convention as dimer weights: sorted in the positive order, coefficient +1.
  NormalizedWord nw = normalize_odd(odd, c.order);
  return {Rational(nw.sign == 0 ? 0 : 1), even, nw.word};
}

}  // namespace

SuperTerm twt(const TwistedAuxGraph& g, const TPath& p) { return path_weight(g, p, true); }

SuperTerm original_weight(const TwistedAuxGraph& g, const TPath& p) {
  return path_weight(g, p, false);
}

SuperPoly tpath_expansion(const ArcContext& c) {
  TwistedAuxGraph g = build_aux(c);
  SuperPoly sum;
  for (const TPath& p : enumerate_tpaths(g)) sum.add_term(twt(g, p));
  return sum;
}

SuperPoly tpath_expansion(const Triangulation& t, Arc arc) {
  Edge chord = make_edge(arc.from, arc.to);
  if (arc.from != arc.to && t.is_edge(chord)) return SuperPoly::even_gen(t.edge_label(chord));
  return tpath_expansion(make_context(t, arc));
}

TPath untwist(const TwistedAuxGraph& g, const TPath& p) {
  TPath out;
  out.twisted = false;
  const auto& st = p.steps;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const TStep& s = st[i];
    if (s.kind == StepKind::sigma_a) {
      const AuxFace& f = g.faces[s.face];
      int u = f.a_vertex, C = f.center;
      if (!out.steps.empty() && is_edge_step(out.steps.back(), C, u))
        out.steps.pop_back();  // (i)
      else
        out.steps.push_back({StepKind::edge, u, C});  // (ii)
      out.steps.push_back({StepKind::sigma, C, s.to, s.face});
    } else if (s.kind == StepKind::sigma_b) {
      const AuxFace& f = g.faces[s.face];
      int w = f.b_vertex, C = f.center;
      out.steps.push_back({StepKind::sigma, s.from, C, s.face});
      if (i + 1 < st.size() && is_edge_step(st[i + 1], w, C))
        ++i;  // (iii)
      else
        out.steps.push_back({StepKind::edge, C, w});  // (iv)
    } else {
      out.steps.push_back(s);
    }
  }
  return out;
}

TPath retwist(const TwistedAuxGraph& g, const TPath& p) {
  TPath out;
  out.twisted = true;
  const auto& st = p.steps;
  int n = g.n();
  for (std::size_t i = 0; i < st.size(); ++i) {
    const TStep& s = st[i];
    if (s.kind != StepKind::sigma) {
      out.steps.push_back(s);
      continue;
    }
    const AuxFace& f = g.faces[s.face];
    if (s.to >= n) {  // entering the face from its center
      int u = f.a_vertex, C = f.center;
      if (!out.steps.empty() && is_edge_step(out.steps.back(), u, C))
        out.steps.pop_back();  // (ii)
      else
        out.steps.push_back({StepKind::edge, C, u});  // (i)
      out.steps.push_back({StepKind::sigma_a, u, s.to, s.face});
    } else {  // leaving to the center
      int w = f.b_vertex, C = f.center;
      if (i + 1 < st.size() && is_edge_step(st[i + 1], C, w)) {
        out.steps.push_back({StepKind::sigma_b, s.from, w, s.face});  // (iv)
        ++i;
      } else {
        out.steps.push_back({StepKind::sigma_b, s.from, w, s.face});  // (iii)
        out.steps.push_back({StepKind::edge, w, C});
      }
    }
  }
  return out;
}

DoubleDimerCover tpath_to_dimer(const TwistedAuxGraph& g, const SnakeGraph& snake, const TPath& p) {
  const ArcContext& c = g.ctx;
  const auto& es = snake.edges();
  DoubleDimerCover m(es.size(), 0);
  std::vector<bool> on_cycle(snake.num_vertices(), false);
  EvenMonomial cycle_part;
  // Each super step σ^A_i τ_ij σ^B_j becomes the cycle around tiles i..j-1
  // (θ_i bottom-left, θ_j top-right).
  for (const TStep& s : p.steps) {
    if (s.kind != StepKind::tau) continue;
    int lo = s.face + 1, hi = s.face_to;
    for (std::size_t e = 0; e < es.size(); ++e) {
      int inside = 0;
      for (const auto& [tile, side] : es[e].refs) inside += tile >= lo && tile <= hi;
      if (inside != 1) continue;
      m[e] = 1;
      on_cycle[es[e].u] = on_cycle[es[e].v] = true;
      if (es[e].label != kUnit) cycle_part = cycle_part * EvenMonomial::gen(es[e].label, 1);
    }
  }
  // The ordinary pieces and blank tiles are a doubled perfect matching of the
  // vertices off the cycles; it is the one carrying the remaining weight.
  SuperTerm w = twt(g, p);
  EvenMonomial target = w.even * c.cross() / cycle_part;
  std::vector<std::vector<int>> inc(snake.num_vertices());
  for (int e = 0; e < static_cast<int>(es.size()); ++e)
    if (!on_cycle[es[e].u] && !on_cycle[es[e].v]) {
      inc[es[e].u].push_back(e);
      inc[es[e].v].push_back(e);
    }
  std::vector<bool> covered = on_cycle;
  std::vector<int> chosen;
  std::vector<std::vector<int>> hits;
  std::function<void()> rec = [&]() {
    int v = -1;
    for (int i = 0; i < snake.num_vertices(); ++i)
      if (!covered[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      EvenMonomial mono;
      for (int e : chosen)
        if (es[e].label != kUnit) mono = mono * EvenMonomial::gen(es[e].label);
      if (mono == target) hits.push_back(chosen);
      return;
    }
    covered[v] = true;
    for (int e : inc[v]) {
      int u = es[e].u == v ? es[e].v : es[e].u;
      if (covered[u]) continue;
      covered[u] = true;
      chosen.push_back(e);
      rec();
      chosen.pop_back();
      covered[u] = false;
    }
    covered[v] = false;
  };
  rec();
  if (hits.size() != 1)
    throw Error(ErrorKind::iso_failure, "no unique doubled matching for a T-path piece");
  for (int e : hits.front()) m[e] = 2;
  return m;
}

std::string path_text(const TwistedAuxGraph& g, const TPath& p) {
  const ArcContext& c = g.ctx;
  int n = g.n();
  auto node = [&](int v) {
    std::ostringstream os;
    if (v < n)
      os << c.to_original[v];
    else
      os << "f" << (v - n + 1);
    return os.str();
  };
  std::ostringstream os;
  if (p.steps.empty()) return "";
  os << node(p.steps.front().from);
  for (const TStep& s : p.steps) {
    switch (s.kind) {
      case StepKind::edge: os << " -"; break;
      case StepKind::sigma_a: os << " -sA-"; break;
      case StepKind::sigma_b: os << " -sB-"; break;
      case StepKind::sigma: os << " -s-"; break;
      case StepKind::tau: os << " -t-"; break;
    }
    os << "> " << node(s.to);
  }
  return os.str();
}

}  // namespace sl
