#include "superlambda/oracle.hpp"

#include <algorithm>
#include <functional>

namespace sl {

namespace {

int other_end(Edge e, int v) { return e.first == v ? e.second : e.first; }

// e^{-1}·p, with e a single even term or a general Laurent polynomial.
SuperPoly over(const SuperPoly& p, const SuperPoly& e, const PositiveOrder& order) {
  return divide(p, e, order);
}

}  // namespace

FlipState FlipState::initial(const Triangulation& t, const DiagOrientation& o,
                             const PositiveOrder& order) {
  FlipState s;
  s.tri_ = t;
  s.orient_ = o;
  s.order_ = order;
  for (const Edge& e : t.edges()) s.lambda_[e] = SuperPoly::even_gen(t.edge_label(e));
  for (const Tri& f : t.triangles()) {
    EvenMonomial root = EvenMonomial::gen(t.edge_label(make_edge(f[0], f[1])), 1) *
                        EvenMonomial::gen(t.edge_label(make_edge(f[1], f[2])), 1) *
                        EvenMonomial::gen(t.edge_label(make_edge(f[0], f[2])), 1);
    s.theta_[f] = SuperPoly::monomial(1, root, OddWord{t.triangle_label(f)});
  }
  return s;
}

FlipState FlipState::initial(const ArcContext& c) { return initial(c.tri, c.orientation, c.order); }

SuperPoly FlipState::mu(const Tri& t) const {
  EvenMonomial root;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const SuperPoly& l = lambda(make_edge(t[i], t[j]));
      if (!l.is_single_term() || !l.leading().odd.empty() || l.leading().coeff != 1)
        throw Error(ErrorKind::non_monomial_inverse, "triangle side is not a monomial");
      root = root * *l.leading().even.pow_half(1);
    }
  return divide_by_monomial(scaled_mu(t), root);
}

FlipState flip(const FlipState& s, Edge d) {
  d = make_edge(d.first, d.second);
  if (!s.tri_.is_diagonal(d)) throw Error(ErrorKind::not_internal, "only diagonals can be flipped");
  int n = s.tri_.n();
  int R = s.orient_.at(d);
  int L = other_end(d, R);
  auto faces = s.tri_.triangles_on(d);
  int p = third_vertex(faces[0], d), q = third_vertex(faces[1], d);
  int B = right_of(n, L, R, p) ? p : q;  // σ side, right of the arrow
  int T = B == p ? q : p;                 // θ side
  Tri sig = make_tri(L, R, B), tht = make_tri(L, R, T);
  const PositiveOrder& o = s.order_;
  const SuperPoly& a = s.lambda(make_edge(L, T));
  const SuperPoly& b = s.lambda(make_edge(T, R));
  const SuperPoly& c = s.lambda(make_edge(R, B));
  const SuperPoly& dd = s.lambda(make_edge(B, L));
  const SuperPoly& e = s.lambda(d);
  const SuperPoly& Ts = s.scaled_mu(sig);
  const SuperPoly& Tt = s.scaled_mu(tht);

  // e f = ac + bd + Θσ Θθ / e
  SuperPoly ef = mul(a, c, o) + mul(b, dd, o);
  SuperPoly f = over(mul(ef, e, o) + mul(Ts, Tt, o), mul(e, e, o), o);
  SuperPoly th_new = over(mul(dd, Tt, o) + mul(a, Ts, o), e, o);   // triangle (L, T, B)
  SuperPoly sg_new = over(mul(b, Ts, o) - mul(c, Tt, o), e, o);    // triangle (R, T, B)

  FlipState out = s;
  Edge fe = make_edge(B, T);
  out.tri_.replace_diagonal(d, fe);
  out.lambda_.erase(d);
  out.lambda_[fe] = f;
  out.theta_.erase(sig);
  out.theta_.erase(tht);
  out.theta_[make_tri(L, T, B)] = th_new;
  out.theta_[make_tri(R, T, B)] = sg_new;
  out.orient_.erase(d);
  out.orient_[fe] = T;
  Edge be = make_edge(T, R);
  if (out.tri_.is_diagonal(be)) out.orient_[be] = other_end(be, out.orient_.at(be));
  return out;
}

FlipState equivalence_move(const FlipState& s, const Tri& t) {
  FlipState out = s;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Edge e = make_edge(t[i], t[j]);
      if (out.tri_.is_diagonal(e)) out.orient_[e] = other_end(e, out.orient_.at(e));
    }
  out.theta_[t] = -out.theta_.at(t);
  return out;
}

FlipState flip_to_arc(const FlipState& s, Arc arc, std::vector<FlipStep>* trace) {
  FlipState cur = s;
  while (true) {
    auto xs = crossing_sequence(cur.tri(), arc);
    if (xs.empty()) return cur;
    FlipState next = flip(cur, xs.front());
    if (trace) {
      Edge created;
      for (const Edge& e : next.tri().diagonals())
        if (!cur.tri().is_diagonal(e)) created = e;
      trace->push_back({xs.front(), created});
    }
    cur = std::move(next);
  }
}

FlipState flip_in_order(const FlipState& s, const std::vector<Edge>& order,
                        std::vector<FlipStep>* trace) {
  FlipState cur = s;
  for (const Edge& d : order) {
    FlipState next = flip(cur, d);
    if (trace) {
      Edge created;
      for (const Edge& e : next.tri().diagonals())
        if (!cur.tri().is_diagonal(e)) created = e;
      trace->push_back({d, created});
    }
    cur = std::move(next);
  }
  return cur;
}

SuperPoly lambda_via_flips(const ArcContext& c) {
  FlipState s = flip_to_arc(FlipState::initial(c), c.arc);
  return s.lambda(make_edge(c.arc.from, c.arc.to));
}

SuperPoly lambda_via_flips(const Triangulation& t, Arc arc) {
  Edge chord = make_edge(arc.from, arc.to);
  if (arc.from != arc.to && t.is_edge(chord)) return SuperPoly::even_gen(t.edge_label(chord));
  return lambda_via_flips(make_context(t, arc));
}

SuperPoly mu_via_flips(const ArcContext& c) {
  FlipState s = flip_to_arc(FlipState::initial(c), c.arc);
  int j = c.fans.centers[c.fans.centers.size() - 2];
  Tri phi = make_tri(c.arc.from, c.arc.to, j);
  int a = c.tri.edge_label(make_edge(j, c.arc.to));
  return divide_by_monomial(s.scaled_mu(phi), EvenMonomial::gen(a, 1));
}

std::vector<std::vector<Edge>> valid_flip_orders(const ArcContext& c, std::size_t limit) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> prefix;
  int n = c.tri.n();
  Edge chord = make_edge(c.arc.from, c.arc.to);
  std::function<void(const Triangulation&)> rec = [&](const Triangulation& t) {
    if (limit && out.size() >= limit) return;
    auto xs = crossing_sequence(t, c.arc);
    if (xs.empty()) {
      out.push_back(prefix);
      return;
    }
    std::vector<Edge> cands = xs;
    std::sort(cands.begin(), cands.end());
    for (const Edge& d : cands) {
      auto faces = t.triangles_on(d);
      Edge repl = make_edge(third_vertex(faces[0], d), third_vertex(faces[1], d));
      if (chords_cross(n, chord, repl)) continue;
      Triangulation next = t;
      next.replace_diagonal(d, repl);
      prefix.push_back(d);
      rec(next);
      prefix.pop_back();
    }
  };
  rec(c.tri);
  return out;
}

std::vector<SuperNumber> fibonacci_flip_sequence(const SuperNumber& z1, const SuperNumber& z2,
                                                 int steps) {
  std::vector<SuperNumber> z{z1, z2};
  SuperNumber one(1), eps = SuperNumber::eps();
  while (static_cast<int>(z.size()) < steps) {
    const SuperNumber& x = z[z.size() - 1];
    const SuperNumber& old = z[z.size() - 2];
    // flipping `old` in the torus with the other arcs x and e = 1
    z.push_back((x * x + one * one + x * one * eps) / old);
  }
  z.resize(std::min<std::size_t>(z.size(), static_cast<std::size_t>(std::max(steps, 0))));
  return z;
}

}  // namespace sl
