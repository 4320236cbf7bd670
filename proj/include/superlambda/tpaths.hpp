#pragma once

// Twisted super T-paths on the twisted auxiliary graph, their weights, the
// conversion to original-style super T-paths, and the map to double dimer
// covers.

#include <string>
#include <vector>

#include "superlambda/dimers.hpp"

namespace sl {

enum class StepKind { edge, sigma_a, sigma_b, sigma, tau };

// Node ids: polygon vertices 0..n-1 of the restricted triangulation, then one
// internal vertex per face (n + face index, faces 0-based in crossing order).
struct TStep {
  StepKind kind = StepKind::edge;
  int from = 0;
  int to = 0;
  int face = -1;     // σ steps: the face; τ steps: the source face
  int face_to = -1;  // τ steps: the target face
  friend bool operator==(const TStep&, const TStep&) = default;
};

struct TPath {
  std::vector<TStep> steps;
  bool twisted = true;
  std::vector<int> vertices() const;
  friend bool operator==(const TPath&, const TPath&) = default;
};

struct AuxFace {
  int center = 0;    // fan center of the face
  int a_vertex = 0;  // endpoint of σ^A (nearer the start of the arc)
  int b_vertex = 0;  // endpoint of σ^B (nearer the end of the arc)
};

struct TwistedAuxGraph {
  ArcContext ctx;
  std::vector<AuxFace> faces;
  int n() const { return ctx.tri.n(); }
  int theta_node(int face) const { return n() + face; }
  int num_sigma_a() const { return static_cast<int>(faces.size()); }
  int num_sigma_b() const { return static_cast<int>(faces.size()); }
  int num_tau() const {
    int m = static_cast<int>(faces.size());
    return m * (m - 1) / 2;
  }
};

TwistedAuxGraph build_aux(const ArcContext& c);

struct TPathEnumeration {
  std::vector<TPath> paths;    // axioms plus the super step constraints
  std::size_t raw_count = 0;   // axioms only
};

TPathEnumeration enumerate_tpaths_detailed(const TwistedAuxGraph& g);
std::vector<TPath> enumerate_tpaths(const TwistedAuxGraph& g);

// Axiom checks; `twisted` selects (T5')/(T6') versus (T5)/(T6).
bool satisfies_axioms(const TwistedAuxGraph& g, const TPath& p);
bool has_super_step(const TPath& p);

SuperTerm twt(const TwistedAuxGraph& g, const TPath& p);
// Weight of an original-style path (σ even steps to fan centers, τ odd).
SuperTerm original_weight(const TwistedAuxGraph& g, const TPath& p);

SuperPoly tpath_expansion(const ArcContext& c);
SuperPoly tpath_expansion(const Triangulation& t, Arc arc);

// Local rewriting of each super step between the twisted and original forms.
TPath untwist(const TwistedAuxGraph& g, const TPath& p);
TPath retwist(const TwistedAuxGraph& g, const TPath& p);

DoubleDimerCover tpath_to_dimer(const TwistedAuxGraph& g, const SnakeGraph& snake, const TPath& p);

std::string path_text(const TwistedAuxGraph& g, const TPath& p);

}  // namespace sl
