#include "superlambda/verify.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "superlambda/lattice.hpp"
#include "superlambda/oracle.hpp"
#include "superlambda/recurrences.hpp"
#include "superlambda/tpaths.hpp"

namespace sl {

RouteResults four_routes(const ArcContext& c) {
  return {lambda_expansion(c), tpath_expansion(c), lattice_expansion(c), lambda_via_flips(c)};
}

RouteResults four_routes(const Triangulation& t, Arc arc) {
  Edge chord = make_edge(arc.from, arc.to);
  if (t.is_edge(chord)) {
    SuperPoly x = SuperPoly::even_gen(t.edge_label(chord));
    return {x, x, x, x};
  }
  return four_routes(make_context(t, arc));
}

bool tpath_bijection_holds(const ArcContext& c) {
  TwistedAuxGraph aux = build_aux(c);
  SnakeGraph g = build_snake(c);
  auto paths = enumerate_tpaths(aux);
  std::set<DoubleDimerCover> image;
  for (const auto& p : paths) {
    DoubleDimerCover m = tpath_to_dimer(aux, g, p);
    if (!is_double_dimer_cover(g, m)) return false;
    SuperTerm w = weight(m, g, c.order);
    w.even = w.even / c.cross();
    if (!(w == twt(aux, p))) return false;
    image.insert(m);
  }
  return image.size() == paths.size() && image.size() == enumerate_double_dimers(g).size();
}

namespace {

bool lattice_checks(const ArcContext& c, std::string* why) {
  SnakeGraph g = build_snake(c);
  SnakeGraph h = dual(g);
  MatchingLattice lat = matching_lattice(g);
  for (const auto& m : lat.covers)
    if (!(path_weight(h, dimer_to_path(m, g, lat)) == dimer_weight(m, g))) {
      *why = "dimer-to-path weight";
      return false;
    }
  std::set<DoubleDimerCover> via_labels;
  for (const auto& x : labelings(h)) {
    via_labels.insert(labeling_to_double_dimer(x, g, lat));
    if (doublepath_to_labeling(labeling_to_doublepath(x, h), h) != x) {
      *why = "labeling round trip";
      return false;
    }
  }
  auto pairs = enumerate_double_dimers(g);
  if (via_labels != std::set<DoubleDimerCover>(pairs.begin(), pairs.end())) {
    *why = "labeling covers differ from pair unions";
    return false;
  }
  if (g.size() <= 6) iso_check(h);
  return true;
}

}  // namespace

VerifyReport verify_universe(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  auto note = [&](const std::string& s) {
    if (r.messages.size() < 10) r.messages.push_back(s);
  };
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    for (const auto& diags : triangulations_up_to_rotation(n)) {
      ++r.triangulations;
      Alphabet names;
      Triangulation t = Triangulation::with_default_labels(n, diags, names);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b || t.is_edge(make_edge(a, b))) continue;
          ++r.arcs;
          std::ostringstream where;
          where << "n=" << n << " diagonals=";
          for (Edge d : diags) where << "(" << d.first << "," << d.second << ")";
          where << " arc=" << a << "," << b;
          ArcContext c = make_context(t, {a, b});
          try {
            if (opt.routes && !four_routes(c).agree()) {
              ++r.route_failures;
              note("routes disagree: " + where.str());
            }
            if (opt.lemmas) {
              SnakeGraph g = build_snake(c);
              for (const LemmaCheck& l : {check_lemma1(g, c.order), check_lemma2(g, c.order),
                                          check_lemma3(g, c.order), check_lemma4(g, c.order)}) {
                if (!l.applies) continue;
                ++r.lemma_applications;
                if (!l.holds) {
                  ++r.lemma_failures;
                  note("recurrence fails (" + l.detail + "): " + where.str());
                }
              }
              if (!partition_holds(g)) {
                ++r.lemma_failures;
                note("D = D_R + D_T + D_tr fails: " + where.str());
              }
            }
            if (opt.bijection && !tpath_bijection_holds(c)) {
              ++r.bijection_failures;
              note("path/cover bijection fails: " + where.str());
            }
            std::string why;
            if (opt.lattice && !lattice_checks(c, &why)) {
              ++r.lattice_failures;
              note("lattice check fails (" + why + "): " + where.str());
            }
          } catch (const Error& e) {
            ++r.route_failures;
            note(std::string("error ") + e.what() + ": " + where.str());
          }
        }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace sl
