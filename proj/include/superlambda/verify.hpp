#pragma once

// Cross-checks over all triangulations of small polygons: the four expansion
// routes, the cover recurrences, the path/cover bijection and the lattice
// isomorphism.

#include <string>
#include <vector>

#include "superlambda/dimers.hpp"

namespace sl {

struct RouteResults {
  SuperPoly dimer, tpath, lattice, flip;
  bool agree() const { return dimer == tpath && dimer == lattice && dimer == flip; }
};

RouteResults four_routes(const ArcContext& c);
RouteResults four_routes(const Triangulation& t, Arc arc);

// Path-to-cover map is a weight-preserving bijection onto D(G).
bool tpath_bijection_holds(const ArcContext& c);

struct VerifyOptions {
  int nmin = 4;
  int nmax = 6;
  bool routes = true;
  bool lemmas = true;
  bool bijection = true;
  bool lattice = true;  // labelings, dimer-to-path weights and the ideal isomorphism
};

struct VerifyReport {
  std::size_t triangulations = 0;
  std::size_t arcs = 0;
  std::size_t route_failures = 0;
  std::size_t lemma_applications = 0;
  std::size_t lemma_failures = 0;
  std::size_t bijection_failures = 0;
  std::size_t lattice_failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;
  bool ok() const {
    return route_failures + lemma_failures + bijection_failures + lattice_failures == 0;
  }
};

VerifyReport verify_universe(const VerifyOptions& opt);

}  // namespace sl
