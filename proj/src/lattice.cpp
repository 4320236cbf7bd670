#include "superlambda/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "superlambda/errors.hpp"

namespace sl {

namespace {

// Outgoing right (0) and up (1) edges per vertex: (edge id, target).
std::vector<std::array<std::pair<int, int>, 2>> monotone_steps(const SnakeGraph& h) {
  std::vector<std::array<std::pair<int, int>, 2>> out(h.num_vertices(),
                                                      {std::pair{-1, -1}, std::pair{-1, -1}});
  const auto& es = h.edges();
  for (int e = 0; e < static_cast<int>(es.size()); ++e) {
    int u = es[e].u, v = es[e].v;
    Point pu = h.point(u), pv = h.point(v);
    if (pu.x > pv.x || pu.y > pv.y) {
      std::swap(u, v);
      std::swap(pu, pv);
    }
    int dir = pv.x > pu.x ? 0 : 1;
    out[u][dir] = {e, v};
  }
  return out;
}

int start_vertex(const SnakeGraph& h) { return h.corner_vertex(1, BL); }
int end_vertex(const SnakeGraph& h) { return h.corner_vertex(h.size(), TR); }

bool contains(const DimerCover& m, int e) { return std::binary_search(m.begin(), m.end(), e); }

}  // namespace

std::vector<LatticePath> lattice_paths(const SnakeGraph& h) {
  auto steps = monotone_steps(h);
  int goal = end_vertex(h);
  std::vector<LatticePath> out;
  LatticePath cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == goal) {
      out.push_back(cur);
      return;
    }
    for (int dir = 0; dir < 2; ++dir) {
      auto [e, w] = steps[v][dir];
      if (e < 0) continue;
      cur.steps.push_back(dir == 0 ? 'R' : 'U');
      cur.edges.push_back(e);
      rec(w);
      cur.steps.pop_back();
      cur.edges.pop_back();
    }
  };
  rec(start_vertex(h));
  return out;
}

LatticePath path_from_tiles(const SnakeGraph& h, const TileSet& below) {
  const auto& es = h.edges();
  std::vector<bool> on(es.size(), false);
  for (std::size_t e = 0; e < es.size(); ++e) {
    const auto& refs = es[e].refs;
    if (refs.size() == 2) {
      on[e] = below[refs[0].first - 1] != below[refs[1].first - 1];
    } else {
      auto [tile, side] = refs.front();
      bool lower_right = side == S || side == E;
      on[e] = lower_right != below[tile - 1];
    }
  }
  auto steps = monotone_steps(h);
  LatticePath p;
  int v = start_vertex(h), goal = end_vertex(h);
  std::size_t used = 0;
  while (v != goal) {
    int dir = -1;
    for (int d = 0; d < 2; ++d)
      if (steps[v][d].first >= 0 && on[steps[v][d].first]) dir = d;
    if (dir < 0) throw Error(ErrorKind::iso_failure, "tile set does not bound a lattice path");
    p.steps.push_back(dir == 0 ? 'R' : 'U');
    p.edges.push_back(steps[v][dir].first);
    v = steps[v][dir].second;
    ++used;
  }
  if (used != static_cast<std::size_t>(std::count(on.begin(), on.end(), true)))
    throw Error(ErrorKind::iso_failure, "tile set does not bound a lattice path");
  return p;
}

TileSet tiles_below(const SnakeGraph& h, const LatticePath& p) {
  // Height of the unique horizontal step in each column.
  std::map<int, int> height;
  for (int e : p.edges) {
    Point a = h.point(h.edges()[e].u), b = h.point(h.edges()[e].v);
    if (a.y == b.y) height[std::min(a.x, b.x)] = a.y;
  }
  TileSet out(h.size(), false);
  for (int t = 1; t <= h.size(); ++t) {
    Point o = h.origin(t);
    out[t - 1] = height.at(o.x) >= o.y + 1;
  }
  return out;
}

SuperTerm path_weight(const SnakeGraph& h, const LatticePath& p) {
  std::vector<EvenMonomial::Factor> f;
  for (int e : p.edges)
    if (h.edges()[e].label != kUnit) f.push_back({h.edges()[e].label, 2});
  return {Rational(1), EvenMonomial::from_factors(f), {}};
}

int MatchingLattice::index_of(const DimerCover& m) const {
  auto it = std::find(covers.begin(), covers.end(), m);
  return it == covers.end() ? -1 : static_cast<int>(it - covers.begin());
}

int MatchingLattice::index_of(const TileSet& ideal) const {
  auto it = std::find(ideals.begin(), ideals.end(), ideal);
  return it == ideals.end() ? -1 : static_cast<int>(it - ideals.begin());
}

MatchingLattice matching_lattice(const SnakeGraph& g) {
  auto all = enumerate_dimers(g);
  const auto& es = g.edges();
  // Minimal cover: boundary edges only, through the bottom of the first tile.
  int s1 = g.edge_id(1, S);
  const DimerCover* start = nullptr;
  for (const auto& m : all) {
    bool boundary = std::all_of(m.begin(), m.end(), [&](int e) { return es[e].refs.size() == 1; });
    if (boundary && contains(m, s1)) start = &m;
  }
  if (!start) throw Error(ErrorKind::iso_failure, "no minimal dimer cover");

  MatchingLattice lat;
  std::set<DimerCover> seen{*start};
  std::deque<std::pair<DimerCover, TileSet>> queue{{*start, TileSet(g.size(), false)}};
  while (!queue.empty()) {
    auto [m, ideal] = queue.front();
    queue.pop_front();
    lat.covers.push_back(m);
    lat.ideals.push_back(ideal);
    for (int t = 1; t <= g.size(); ++t) {
      if (ideal[t - 1]) continue;
      int s = g.edge_id(t, S), n = g.edge_id(t, N), e = g.edge_id(t, E), w = g.edge_id(t, W);
      DimerCover next;
      if (contains(m, s) && contains(m, n)) {
        for (int x : m)
          if (x != s && x != n) next.push_back(x);
        next.push_back(e);
        next.push_back(w);
      } else if (contains(m, e) && contains(m, w)) {
        for (int x : m)
          if (x != e && x != w) next.push_back(x);
        next.push_back(s);
        next.push_back(n);
      } else {
        continue;
      }
      std::sort(next.begin(), next.end());
      if (!seen.insert(next).second) continue;
      TileSet up = ideal;
      up[t - 1] = true;
      queue.push_back({next, up});
    }
  }
  if (lat.covers.size() != all.size()) throw Error(ErrorKind::iso_failure, "twists miss a dimer cover");
  return lat;
}

LatticePath dimer_to_path(const DimerCover& m, const SnakeGraph& g, const MatchingLattice& lat) {
  int i = lat.index_of(m);
  if (i < 0) throw Error(ErrorKind::iso_failure, "not a dimer cover of the graph");
  return path_from_tiles(dual(g), lat.ideals[i]);
}

LatticePath dimer_to_path(const DimerCover& m, const SnakeGraph& g) {
  return dimer_to_path(m, g, matching_lattice(g));
}

bool is_labeling(const SnakeGraph& h, const TileLabeling& x) {
  if (static_cast<int>(x.size()) != h.size()) return false;
  for (int v : x)
    if (v < 0 || v > 2) return false;
  const std::string& w = h.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'R' && x[i] > x[i + 1]) return false;
    if (w[i] == 'U' && x[i] < x[i + 1]) return false;
  }
  return true;
}

std::vector<TileLabeling> labelings(const SnakeGraph& h) {
  std::vector<TileLabeling> out;
  TileLabeling x;
  const std::string& w = h.word();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(x.size()) == h.size()) {
      out.push_back(x);
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      if (!x.empty()) {
        char step = w[x.size() - 1];
        if (step == 'R' && x.back() > v) continue;
        if (step == 'U' && x.back() < v) continue;
      }
      x.push_back(v);
      rec();
      x.pop_back();
    }
  };
  rec();
  return out;
}

DoubleLatticePath labeling_to_doublepath(const TileLabeling& x, const SnakeGraph& h) {
  TileSet one(x.size()), two(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    one[i] = x[i] >= 1;
    two[i] = x[i] == 2;
  }
  DoubleLatticePath p(h.edges().size(), 0);
  for (int e : path_from_tiles(h, one).edges) ++p[e];
  for (int e : path_from_tiles(h, two).edges) ++p[e];
  return p;
}

TileLabeling doublepath_to_labeling(const DoubleLatticePath& p, const SnakeGraph& h) {
  auto steps = monotone_steps(h);
  std::vector<int> left(p.begin(), p.end());
  int goal = end_vertex(h);
  TileLabeling x(h.size(), 0);
  // Peel off the lowest path (right steps first), then the remaining one.
  for (int round = 0; round < 2; ++round) {
    LatticePath q;
    int v = start_vertex(h);
    while (v != goal) {
      int dir = -1;
      for (int d = 0; d < 2 && dir < 0; ++d)
        if (steps[v][d].first >= 0 && left[steps[v][d].first] > 0) dir = d;
      if (dir < 0) throw Error(ErrorKind::iso_failure, "not a double lattice path");
      --left[steps[v][dir].first];
      q.edges.push_back(steps[v][dir].first);
      q.steps.push_back(dir == 0 ? 'R' : 'U');
      v = steps[v][dir].second;
    }
    TileSet below = tiles_below(h, q);
    for (int t = 0; t < h.size(); ++t) x[t] += below[t];
  }
  if (std::any_of(left.begin(), left.end(), [](int c) { return c != 0; }))
    throw Error(ErrorKind::iso_failure, "not a double lattice path");
  return x;
}

std::vector<DoubleLatticePath> enumerate_double_paths(const SnakeGraph& h) {
  auto paths = lattice_paths(h);
  std::set<DoubleLatticePath> seen;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i; j < paths.size(); ++j) {
      DoubleLatticePath m(h.edges().size(), 0);
      for (int e : paths[i].edges) ++m[e];
      for (int e : paths[j].edges) ++m[e];
      seen.insert(m);
    }
  return {seen.begin(), seen.end()};
}

SuperTerm doublepath_weight(const DoubleLatticePath& p, const SnakeGraph& h,
                            const PositiveOrder& order) {
  std::vector<EvenMonomial::Factor> f;
  for (std::size_t e = 0; e < p.size(); ++e) {
    int label = h.edges()[e].label;
    if (p[e] > 0 && label != kUnit) f.push_back({label, p[e]});
  }
  // Loops enclose the runs of tiles labeled 1. Two loops may touch at a
  // corner, so they are read off the labeling rather than the edge graph.
  TileLabeling x = doublepath_to_labeling(p, h);
  std::vector<int> odd;
  for (int t = 0; t < h.size();) {
    if (x[t] != 1) {
      ++t;
      continue;
    }
    int last = t;
    while (last + 1 < h.size() && x[last + 1] == 1) ++last;
    odd.push_back(h.tile(t + 1).corner_bl);
    odd.push_back(h.tile(last + 1).corner_tr);
    t = last + 1;
  }
  NormalizedWord nw = normalize_odd(odd, order);
  return {Rational(nw.sign == 0 ? 0 : 1), EvenMonomial::from_factors(f), nw.word};
}

DoubleDimerCover labeling_to_double_dimer(const TileLabeling& x, const SnakeGraph& g,
                                          const MatchingLattice& lat) {
  TileSet one(x.size()), two(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    one[i] = x[i] >= 1;
    two[i] = x[i] == 2;
  }
  int a = lat.index_of(one), b = lat.index_of(two);
  if (a < 0 || b < 0) throw Error(ErrorKind::iso_failure, "labeling outside the matching lattice");
  return superpose(g, lat.covers[a], lat.covers[b]);
}

SuperPoly lattice_expansion(const ArcContext& c) {
  SnakeGraph h = dual(build_snake(c));
  SuperPoly sum;
  for (const auto& x : labelings(h)) sum.add_term(doublepath_weight(labeling_to_doublepath(x, h), h, c.order));
  return divide_by_monomial(sum, c.cross());
}

SuperPoly lattice_expansion(const Triangulation& t, Arc arc) {
  Edge chord = make_edge(arc.from, arc.to);
  if (arc.from != arc.to && t.is_edge(chord)) return SuperPoly::even_gen(t.edge_label(chord));
  return lattice_expansion(make_context(t, arc));
}

std::vector<std::vector<bool>> Poset::closure() const {
  std::vector<std::vector<bool>> le(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i) le[i][i] = true;
  for (auto [a, b] : covers) le[a][b] = true;
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (le[i][k])
        for (int j = 0; j < size; ++j)
          if (le[k][j]) le[i][j] = true;
  return le;
}

bool Poset::leq(int a, int b) const { return closure()[a][b]; }

Poset tile_poset(const SnakeGraph& h) {
  Poset p;
  p.size = h.size();
  for (int i = 1; i <= h.size(); ++i) p.names.push_back("p" + std::to_string(i));
  const std::string& w = h.word();
  for (int i = 0; i + 1 < p.size; ++i) {
    if (w[i] == 'R')
      p.covers.push_back({i + 1, i});
    else
      p.covers.push_back({i, i + 1});
  }
  return p;
}

Poset product_with_chain(const Poset& p) {
  Poset q;
  q.size = 2 * p.size;
  for (int x = 0; x < p.size; ++x) {
    std::string base = x < static_cast<int>(p.names.size()) ? p.names[x] : std::to_string(x);
    q.names.push_back("(" + base + ",0)");
    q.names.push_back("(" + base + ",1)");
    q.covers.push_back({2 * x, 2 * x + 1});
  }
  for (auto [a, b] : p.covers)
    for (int l = 0; l < 2; ++l) q.covers.push_back({2 * a + l, 2 * b + l});
  return q;
}

bool is_order_ideal(const Poset& p, const OrderIdeal& s) {
  auto le = p.closure();
  for (int b = 0; b < p.size; ++b)
    if (s[b])
      for (int a = 0; a < p.size; ++a)
        if (le[a][b] && !s[a]) return false;
  return true;
}

std::vector<OrderIdeal> order_ideals(const Poset& p) {
  // Linear extension, then include an element only when its lower covers are in.
  std::vector<int> indeg(p.size, 0), order;
  std::vector<std::vector<int>> up(p.size), down(p.size);
  for (auto [a, b] : p.covers) {
    ++indeg[b];
    up[a].push_back(b);
    down[b].push_back(a);
  }
  std::deque<int> ready;
  for (int i = 0; i < p.size; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (int w : up[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  std::vector<OrderIdeal> out;
  OrderIdeal cur(p.size, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    int v = order[i];
    rec(i + 1);
    if (std::all_of(down[v].begin(), down[v].end(), [&](int a) { return cur[a]; })) {
      cur[v] = true;
      rec(i + 1);
      cur[v] = false;
    }
  };
  rec(0);
  return out;
}

OrderIdeal labeling_to_ideal(const TileLabeling& x) {
  OrderIdeal s(2 * x.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[2 * i] = x[i] >= 1;
    s[2 * i + 1] = x[i] == 2;
  }
  return s;
}

std::vector<std::pair<int, int>> labeling_covers(const std::vector<TileLabeling>& xs) {
  std::map<TileLabeling, int> idx;
  for (std::size_t i = 0; i < xs.size(); ++i) idx[xs[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t t = 0; t < xs[i].size(); ++t) {
      TileLabeling y = xs[i];
      if (++y[t] > 2) continue;
      auto it = idx.find(y);
      if (it != idx.end()) out.push_back({static_cast<int>(i), it->second});
    }
  return out;
}

IsoWitness iso_check(const SnakeGraph& h) {
  auto xs = labelings(h);
  Poset pp = product_with_chain(tile_poset(h));
  auto ideals = order_ideals(pp);
  IsoWitness wit{xs.size(), ideals.size(), 0};
  if (xs.size() != ideals.size()) throw Error(ErrorKind::iso_failure, "cardinalities differ");

  std::map<OrderIdeal, int> ideal_idx;
  for (std::size_t i = 0; i < ideals.size(); ++i) ideal_idx[ideals[i]] = static_cast<int>(i);
  std::vector<int> phi(xs.size());
  std::set<int> hit;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto it = ideal_idx.find(labeling_to_ideal(xs[i]));
    if (it == ideal_idx.end()) throw Error(ErrorKind::iso_failure, "image is not an order ideal");
    phi[i] = it->second;
    hit.insert(it->second);
  }
  if (hit.size() != ideals.size()) throw Error(ErrorKind::iso_failure, "map is not onto");

  std::set<std::pair<int, int>> ideal_covers;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (int e = 0; e < pp.size; ++e) {
      if (ideals[i][e]) continue;
      OrderIdeal bigger = ideals[i];
      bigger[e] = true;
      auto it = ideal_idx.find(bigger);
      if (it != ideal_idx.end()) ideal_covers.insert({static_cast<int>(i), it->second});
    }
  std::set<std::pair<int, int>> mapped;
  for (auto [a, b] : labeling_covers(xs)) mapped.insert({phi[a], phi[b]});
  if (mapped != ideal_covers) throw Error(ErrorKind::iso_failure, "cover relations differ");
  wit.cover_relations = mapped.size();
  return wit;
}

std::string hasse_dot(const std::vector<TileLabeling>& xs) {
  std::ostringstream os;
  os << "digraph L {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << "  n" << i << " [label=\"";
    for (int v : xs[i]) os << v;
    os << "\"];\n";
  }
  for (auto [a, b] : labeling_covers(xs)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sl
