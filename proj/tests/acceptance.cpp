// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "superlambda/dimers.hpp"
#include "superlambda/lattice.hpp"
#include "superlambda/oracle.hpp"
#include "superlambda/superfib.hpp"
#include "superlambda/verify.hpp"

using namespace sl;
using fixtures::sum;
using fixtures::term;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Outcome single_tile() {
  auto t0 = std::chrono::steady_clock::now();
  auto lt = fixtures::load(fixtures::kQuad);
  ArcContext c = make_context(lt.tri, {1, 3});
  SuperPoly got = lambda_expansion(c);
  std::size_t covers = enumerate_double_dimers(build_snake(c)).size();
  double s = since(t0);
  Alphabet& a = lt.names;
  SuperPoly want = sum({term(a, {{"a", 2}, {"c", 2}, {"e", -2}}), term(a, {{"b", 2}, {"d", 2}, {"e", -2}}),
                        term(a, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", -2}}, {"sigma", "theta"})});
  bool ok = got == want && covers == 3 && s < 0.010;
  return {ok, to_text(got, a) + "; " + std::to_string(covers) + " covers; " + fmt(s)};
}

Outcome pentagon() {
  auto t0 = std::chrono::steady_clock::now();
  auto lt = fixtures::load(fixtures::kPentagon);
  SuperPoly got = lambda_expansion(lt.tri, {1, 4});
  double s = since(t0);
  Alphabet& a = lt.names;
  SuperPoly want = sum({
      term(a, {{"a", 2}, {"c", 2}, {"x2", -2}}),
      term(a, {{"a", 2}, {"b", 2}, {"d", 2}, {"x1", -2}, {"x2", -2}}),
      term(a, {{"b", 2}, {"e", 2}, {"x1", -2}}),
      term(a, {{"b", 2}, {"a", 1}, {"d", 1}, {"e", 1}, {"x1", -2}, {"x2", -1}}, {"th1", "th2"}),
      term(a, {{"a", 2}, {"b", 1}, {"c", 1}, {"d", 1}, {"x1", -1}, {"x2", -2}}, {"th2", "th3"}),
      term(a, {{"a", 1}, {"b", 1}, {"c", 1}, {"e", 1}, {"x1", -1}, {"x2", -1}}, {"th1", "th3"}),
  });
  return {got == want && got.size() == 6 && s < 0.050, std::to_string(got.size()) + " terms; " + fmt(s)};
}

Outcome four_routes_all() {
  VerifyOptions o;
  o.nmax = 9;
  o.lemmas = o.bijection = o.lattice = false;
  VerifyReport r = verify_universe(o);
  return {r.ok() && r.seconds < 60,
          std::to_string(r.arcs) + " arcs over " + std::to_string(r.triangulations) + " triangulations, " +
              std::to_string(r.route_failures) + " failures; " + fmt(r.seconds)};
}

Outcome mu_small() {
  std::size_t checked = 0, bad = 0;
  for (int n = 4; n <= 5; ++n)
    for (const auto& d : all_triangulations(n)) {
      Alphabet names;
      Triangulation t = Triangulation::with_default_labels(n, d, names);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || t.is_edge(make_edge(i, j))) continue;
          for (QuadCenter q : {QuadCenter::left, QuadCenter::right}) {
            ArcContext c = make_context(t, {i, j}, q);
            ++checked;
            if (!(mu_expansion(c).value == mu_via_flips(c))) ++bad;
          }
        }
    }
  auto lt = fixtures::load(fixtures::kQuad);
  Alphabet& a = lt.names;
  // (bd theta + sqrt(abcd) sigma) / sqrt(be)
  SuperPoly want = sum({term(a, {{"b", 1}, {"d", 2}, {"e", -1}}, {"theta"}),
                        term(a, {{"a", 1}, {"c", 1}, {"d", 1}, {"e", -1}}, {"sigma"})});
  bool example = mu_expansion(make_context(lt.tri, {1, 3})).value == want;
  return {bad == 0 && example, std::to_string(checked) + " arcs, " + std::to_string(bad) +
                                   " mismatches; quadrilateral example " + (example ? "matches" : "differs")};
}

Outcome lemmas() {
  VerifyOptions o;
  o.nmax = 11;  // at most 8 crossed diagonals
  o.routes = o.bijection = o.lattice = false;
  VerifyReport r = verify_universe(o);
  return {r.ok() && r.lemma_applications > 0,
          std::to_string(r.lemma_applications) + " applications on " + std::to_string(r.arcs) + " graphs, " +
              std::to_string(r.lemma_failures) + " failures; " + fmt(r.seconds)};
}

Outcome bijection() {
  VerifyOptions o;
  o.nmax = 9;
  o.routes = o.lemmas = o.lattice = false;
  VerifyReport r = verify_universe(o);
  return {r.ok(), std::to_string(r.arcs) + " arcs, " + std::to_string(r.bijection_failures) + " failures"};
}

Outcome lattice_iso() {
  std::size_t graphs = 0;
  std::string why;
  for (int len = 0; len <= 5; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'U' : 'R';
      Alphabet a;
      try {
        iso_check(snake_from_word(w, a));
        ++graphs;
      } catch (const Error& e) {
        if (why.empty()) why = w + ": " + e.what();
      }
    }
  Alphabet a;
  SnakeGraph one = snake_from_word("", a);
  auto xs = labelings(one);
  auto cov = labeling_covers(xs);
  bool chain = xs.size() == 3 && cov.size() == 2 && cov[0].second == cov[1].first;
  return {why.empty() && graphs == 63 && chain,
          std::to_string(graphs) + " graphs isomorphic; single tile " + (chain ? "is a 3-chain" : "is not a 3-chain") +
              (why.empty() ? "" : "; " + why)};
}

Outcome fib() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = p_value(1) == SuperNumber(2, 1) && p_value(3) == SuperNumber(5, 6);
  std::size_t lines = 2, bad = ok ? 0 : 1;
  for (int m = 1; m <= 14; ++m) {
    CoverCensus c = census(m);
    ClosedForms f = closed_forms(m);
    bool good = c.cycle_free == f.x && c.one_odd_cycle == f.y_gsum && f.x == fibonacci(m + 2) &&
                p_value(m) == SuperNumber(Rational(f.x), Rational(f.y_gsum));
    ++lines;
    bad += !good;
  }
  RecurrenceReport r = recurrence_checks(20, 15);
  RecurrenceReport s = symbolic_checks(9);
  lines += r.lines.size() + s.lines.size();
  bad += r.failures() + s.failures();

  FibAlphabet f = fib_alphabet(true);
  SuperNumber p2 = partition_transfer(Gm(2, f), f);
  Alphabet& a = f.names;
  SuperPoly u = sum({term(a, {{"a", 2}, {"b", -2}}), term(a, {{"a", -2}, {"b", 2}}), term(a, {{"a", -2}, {"b", -2}})});
  SuperPoly v = sum({term(a, {{"a", -2}}), term(a, {{"b", -2}})});
  bool p2_ok = p2 == SuperNumber(u, v);
  ++lines;
  bad += !p2_ok;
  double secs = since(t0);
  return {bad == 0 && secs < 10,
          std::to_string(lines - bad) + "/" + std::to_string(lines) + " checks; symbolic p2 " +
              (p2_ok ? "matches" : "differs") + "; " + fmt(secs)};
}

// Flips every diagonal twice; the triangle to the left of the diagonal's
// arrow must be the only one whose mu changes, and it must change sign.
Outcome double_flip() {
  auto lt = fixtures::load(fixtures::kQuad);
  ArcContext c = make_context(lt.tri, {1, 3});
  FlipState s = FlipState::initial(c);
  FlipState back = flip(flip(s, {0, 2}), {1, 3});
  bool quad = back.lambda({0, 2}) == s.lambda({0, 2}) && back.mu({0, 2, 3}) == -s.mu({0, 2, 3}) &&
               back.mu({0, 1, 2}) == s.mu({0, 1, 2}) && back.orientation().at({0, 2}) == 0;

  std::size_t cases = 0, bad = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& d : all_triangulations(n)) {
      Alphabet names;
      Triangulation t = Triangulation::with_default_labels(n, d, names);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || t.is_edge(make_edge(i, j))) continue;
          ArcContext cx = make_context(t, {i, j});
          FlipState s0 = FlipState::initial(cx);
          for (Edge e : s0.tri().diagonals()) {
            ++cases;
            FlipState s1 = flip(s0, e);
            Edge f = s1.tri().diagonals().back();
            for (Edge g : s1.tri().diagonals())
              if (!s0.tri().is_diagonal(g)) f = g;
            FlipState s2 = flip(s1, f);
            int head = s0.orientation().at(e);
            int tail = head == e.first ? e.second : e.first;
            bool good = s2.tri().is_diagonal(e);
            for (Edge g : s0.tri().edges()) good = good && s2.lambda(g) == s0.lambda(g);
            for (const Tri& tr : s0.tri().triangles()) {
              auto on_e = s0.tri().triangles_on(e);
              int third = third_vertex(tr, e);
              bool top = std::find(on_e.begin(), on_e.end(), tr) != on_e.end() && ccw(s0.tri().n(), tail, head, third);
              SuperPoly want = top ? -s0.scaled_mu(tr) : s0.scaled_mu(tr);
              good = good && s2.scaled_mu(tr) == want;
            }
            bad += !good;
          }
        }
    }
  return {quad && bad == 0, std::string("quadrilateral ") + (quad ? "ok" : "wrong") + "; " +
                                 std::to_string(cases) + " double flips, " + std::to_string(bad) + " mismatches"};
}

Outcome flip_orders() {
  std::mt19937 rng(20240611);
  std::size_t triples = 0, bad = 0, multi = 0;
  std::vector<std::vector<std::vector<Edge>>> tris(10);
  for (int n = 5; n <= 9; ++n) tris[n] = all_triangulations(n);
  while (triples < 150) {
    int n = std::uniform_int_distribution<int>(5, 9)(rng);
    const auto& d = tris[n][std::uniform_int_distribution<std::size_t>(0, tris[n].size() - 1)(rng)];
    Alphabet names;
    Triangulation t = Triangulation::with_default_labels(n, d, names);
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (i == j || t.is_edge(make_edge(i, j))) continue;
    ArcContext c = make_context(t, {i, j});
    auto orders = valid_flip_orders(c, 200);
    if (orders.size() > 1) ++multi;
    const auto& pick = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
    Edge target = make_edge(c.arc.from, c.arc.to);
    FlipState s = FlipState::initial(c);
    SuperPoly ref = flip_in_order(s, orders.front()).lambda(target);
    bool good = flip_in_order(s, pick).lambda(target) == ref && ref == lambda_expansion(c);
    for (const auto& o : orders) good = good && flip_in_order(s, o).lambda(target) == ref;
    ++triples;
    bad += !good;
  }
  return {bad == 0 && multi > 0, std::to_string(triples) + " triples (" + std::to_string(multi) +
                                     " with several orders), " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"single tile expansion", single_tile},
      {"pentagon expansion", pentagon},
      {"four routes agree, n = 4..9", four_routes_all},
      {"mu expansion on quadrilaterals and pentagons", mu_small},
      {"recurrence lemmas, up to 8 tiles", lemmas},
      {"path to cover bijection, n <= 9", bijection},
      {"labeling lattice isomorphic to ideals, up to 6 tiles", lattice_iso},
      {"super Fibonacci numbers", fib},
      {"double flip", double_flip},
      {"flip order independence", flip_orders},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k << ": " << name << " -- " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
