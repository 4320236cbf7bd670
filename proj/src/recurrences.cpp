#include "superlambda/recurrences.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sl {

namespace {

EvenMonomial label_mono(int label, int twice_exp = 2) {
  return label == kUnit ? EvenMonomial{} : EvenMonomial::gen(label, twice_exp);
}

SuperTerm scaled(SuperTerm t, const EvenMonomial& m) {
  t.even = t.even * m;
  return t;
}

// Edge of g for each edge of the prefix h.
std::vector<int> lift_map(const SnakeGraph& h, const SnakeGraph& g) {
  std::vector<int> out;
  for (const auto& e : h.edges()) out.push_back(g.edge_id(e.refs.front().first, e.refs.front().second));
  return out;
}

DoubleDimerCover lift(const DoubleDimerCover& m, const std::vector<int>& map, std::size_t n) {
  DoubleDimerCover out(n, 0);
  for (std::size_t e = 0; e < m.size(); ++e) out[map[e]] += m[e];
  return out;
}

// Perfect matchings of g restricted to the vertices outside the first `keep`
// tiles that contain the edge `required`.
std::vector<std::vector<int>> tail_matchings(const SnakeGraph& g, int keep, int required) {
  std::set<int> kept;
  for (int t = 1; t <= keep; ++t)
    for (int c = 0; c < 4; ++c) kept.insert(g.corner_vertex(t, static_cast<Corner>(c)));
  std::vector<int> free_v;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!kept.count(v)) free_v.push_back(v);
  std::vector<int> usable;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e)
    if (!kept.count(g.edges()[e].u) && !kept.count(g.edges()[e].v)) usable.push_back(e);
  std::vector<std::vector<int>> out;
  std::set<int> covered;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    auto it = std::find_if(free_v.begin(), free_v.end(), [&](int v) { return !covered.count(v); });
    if (it == free_v.end()) {
      if (std::find(cur.begin(), cur.end(), required) != cur.end()) out.push_back(cur);
      return;
    }
    int v = *it;
    for (int e : usable) {
      int a = g.edges()[e].u, b = g.edges()[e].v;
      if ((a != v && b != v) || covered.count(a) || covered.count(b)) continue;
      covered.insert(a);
      covered.insert(b);
      cur.push_back(e);
      rec();
      cur.pop_back();
      covered.erase(a);
      covered.erase(b);
    }
  };
  rec();
  return out;
}

// Checks that M -> lift(M) + 2*(unique tail matching) is a bijection from
// D(G^(-k)) onto the covers of G doubling `required`, scaling weights by `factor`.
LemmaCheck removal_bijection(const SnakeGraph& g, int k, int required, const EvenMonomial& factor,
                             const PositiveOrder& order) {
  LemmaCheck r;
  r.applies = true;
  SnakeGraph h = g.prefix(g.size() - k);
  auto tails = tail_matchings(g, g.size() - k, required);
  if (tails.size() != 1) {
    r.detail = "tail completion is not unique";
    return r;
  }
  auto map = lift_map(h, g);
  auto source = enumerate_double_dimers(h);
  std::set<DoubleDimerCover> target;
  for (const auto& m : enumerate_double_dimers(g))
    if (m[required] == 2) target.insert(m);
  r.domain = source.size();
  r.image = target.size();
  std::set<DoubleDimerCover> hit;
  SuperPoly lhs, rhs;
  for (const auto& m : source) {
    DoubleDimerCover f = lift(m, map, g.edges().size());
    for (int e : tails.front()) f[e] += 2;
    if (!target.count(f) || !hit.insert(f).second) {
      r.detail = "image outside the target or repeated";
      return r;
    }
    SuperTerm expect = scaled(weight(m, h, order), factor);
    if (!(weight(f, g, order) == expect)) {
      r.detail = "weight factor differs";
      return r;
    }
    lhs.add_term(expect);
  }
  for (const auto& m : target) rhs.add_term(weight(m, g, order));
  r.holds = hit.size() == target.size() && lhs == rhs;
  if (!r.holds) r.detail = "not onto";
  return r;
}

}  // namespace

int terminal_staircase(const SnakeGraph& g) {
  const std::string& w = g.word();
  if (w.empty()) return 0;
  std::size_t j = 1;
  while (j < w.size() && w[w.size() - j - 1] != w[w.size() - j]) ++j;
  return j == w.size() ? 0 : static_cast<int>(j) + 1;
}

bool is_full_staircase(const SnakeGraph& g) { return terminal_staircase(g) == 0; }

LemmaCheck check_lemma1(const SnakeGraph& g, const PositiveOrder& order) {
  if (g.size() < 2) return {};
  int n = g.size();
  int e = g.word().back() == 'R' ? g.edge_id(n, E) : g.edge_id(n, N);
  return removal_bijection(g, 1, e, label_mono(g.edges()[e].label), order);
}

LemmaCheck check_lemma2(const SnakeGraph& g, const PositiveOrder& order) {
  int k = terminal_staircase(g);
  if (k < 2) return {};
  int n = g.size();
  int e = g.word().back() == 'R' ? g.edge_id(n, N) : g.edge_id(n, E);
  EvenMonomial factor = label_mono(g.edges()[e].label);
  for (int i = 2; i <= k; ++i) factor = factor * label_mono(g.tile(n - i + 1).diagonal);
  return removal_bijection(g, k, e, factor, order);
}

LemmaCheck check_lemma3(const SnakeGraph& g, const PositiveOrder& order) {
  if (!is_full_staircase(g)) return {};
  LemmaCheck r;
  r.applies = true;
  int n = g.size();
  bool top = g.word().empty() || g.word().back() == 'R';
  int e = top ? g.edge_id(n, N) : g.edge_id(n, E);
  // c is the side of tile 1 opposite its gluing (the bottom for a single tile).
  Side first = g.word().empty() || g.word().front() == 'U' ? S : W;
  EvenMonomial factor = label_mono(g.edges()[e].label) * label_mono(g.edges()[g.edge_id(1, first)].label);
  for (int i = 2; i <= n; ++i) factor = factor * label_mono(g.tile(n - i + 1).diagonal);
  std::vector<DoubleDimerCover> hits;
  for (const auto& m : enumerate_double_dimers(g))
    if (m[e] == 2) hits.push_back(m);
  r.domain = r.image = hits.size();
  if (hits.size() != 1) {
    r.detail = "class is not a singleton";
    return r;
  }
  SuperTerm expect{Rational(1), factor, {}};
  r.holds = weight(hits.front(), g, order) == expect;
  if (!r.holds) r.detail = "weight differs";
  return r;
}

LemmaCheck check_lemma4(const SnakeGraph& g, const PositiveOrder& order) {
  if (g.size() < 2) return {};
  LemmaCheck r;
  r.applies = true;
  int n = g.size();
  bool ends_r = g.word().back() == 'R';
  Side glued = ends_r ? W : S;
  std::array<Side, 3> singles = ends_r ? std::array<Side, 3>{S, E, N} : std::array<Side, 3>{W, N, E};
  SnakeGraph h = g.prefix(n - 1);
  auto map = lift_map(h, g);
  int shared_h = h.edge_id(n - 1, ends_r ? E : N);
  int shared = g.edge_id(n, glued);
  EvenMonomial factor = label_mono(g.edges()[shared].label, -1);
  for (Side s : singles) factor = factor * label_mono(g.edges()[g.edge_id(n, s)].label, 1);
  int dagger = g.tile(n).corner_bl, star = g.tile(n).corner_tr;

  std::set<DoubleDimerCover> target;
  for (const auto& m : enumerate_double_dimers(g))
    if (classify(m, g).tr) target.insert(m);
  std::set<DoubleDimerCover> hit;
  for (const auto& m : enumerate_double_dimers(h)) {
    if (m[shared_h] == 0) continue;
    ++r.domain;
    DoubleDimerCover f = lift(m, map, g.edges().size());
    --f[shared];
    for (Side s : singles) ++f[g.edge_id(n, s)];
    if (!target.count(f) || !hit.insert(f).second) {
      r.detail = "image outside D_tr or repeated";
      return r;
    }
    SuperTerm expect = scaled(toggle(toggle(weight(m, h, order), dagger, order), star, order), factor);
    if (!(weight(f, g, order) == expect)) {
      r.detail = "weight differs";
      return r;
    }
  }
  r.image = target.size();
  r.holds = hit.size() == target.size();
  if (!r.holds) r.detail = "not onto";
  return r;
}

bool partition_holds(const SnakeGraph& g) {
  for (const auto& m : enumerate_double_dimers(g)) {
    Classification c = classify(m, g);
    if (int(c.R) + int(c.T) + int(c.tr) != 1) return false;
  }
  return true;
}

}  // namespace sl
