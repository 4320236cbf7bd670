#pragma once

// Super λ-lengths and μ-invariants by iterated super Ptolemy flips.
//
// Each triangle t stores Θ_t = μ_t·√(λ_1 λ_2 λ_3) over its three sides. In
// these variables the flip rules are rational, so composite λ values never
// sit under a square root.

#include <map>
#include <vector>

#include "superlambda/polygon.hpp"
#include "superlambda/supernumber.hpp"

namespace sl {

class FlipState {
 public:
  static FlipState initial(const Triangulation& t, const DiagOrientation& o,
                           const PositiveOrder& order);
  static FlipState initial(const ArcContext& c);

  const Triangulation& tri() const { return tri_; }
  const DiagOrientation& orientation() const { return orient_; }
  const PositiveOrder& order() const { return order_; }
  const SuperPoly& lambda(Edge e) const { return lambda_.at(make_edge(e.first, e.second)); }
  const SuperPoly& scaled_mu(const Tri& t) const { return theta_.at(t); }
  bool has_edge(Edge e) const { return lambda_.count(make_edge(e.first, e.second)) > 0; }

  // μ_t, available when the three side lengths of t are monomials.
  SuperPoly mu(const Tri& t) const;

  friend FlipState flip(const FlipState& s, Edge d);
  friend FlipState equivalence_move(const FlipState& s, const Tri& t);

 private:
  Triangulation tri_;
  DiagOrientation orient_;
  PositiveOrder order_;
  std::map<Edge, SuperPoly> lambda_;
  std::map<Tri, SuperPoly> theta_;
};

FlipState flip(const FlipState& s, Edge d);
FlipState equivalence_move(const FlipState& s, const Tri& t);

struct FlipStep {
  Edge flipped;
  Edge created;
};

// Flip the crossed diagonals in crossing order until the arc appears.
FlipState flip_to_arc(const FlipState& s, Arc arc, std::vector<FlipStep>* trace = nullptr);
// Same, flipping diagonals in the given order (each must cross the arc when flipped).
FlipState flip_in_order(const FlipState& s, const std::vector<Edge>& order,
                        std::vector<FlipStep>* trace = nullptr);

SuperPoly lambda_via_flips(const ArcContext& c);
SuperPoly lambda_via_flips(const Triangulation& t, Arc arc);

// √(d f)·φ for φ = (a, b, c_N) after crossing-order flips.
SuperPoly mu_via_flips(const ArcContext& c);

// Orders in which flipping each diagonal removes one crossing with the arc.
std::vector<std::vector<Edge>> valid_flip_orders(const ArcContext& c, std::size_t limit = 0);

// Torus specialization a = c, b = d, e = 1: Z_{m} = (Z_{m-1}² + Z_{m-1} ε + 1)/Z_{m-2}.
std::vector<SuperNumber> fibonacci_flip_sequence(const SuperNumber& z1, const SuperNumber& z2,
                                                 int steps);

}  // namespace sl
