#pragma once

// Dimer and double dimer covers of snake graphs, their weights, and the
// λ- and μ-expansions assembled from them.

#include <functional>
#include <vector>

#include "superlambda/snake.hpp"

namespace sl {

using DimerCover = std::vector<int>;                 // sorted edge ids
using DoubleDimerCover = std::vector<unsigned char>;  // multiplicity per edge id

struct Cycle {
  int first_tile = 0;
  int last_tile = 0;
  std::vector<int> edges;
};

std::vector<DimerCover> enumerate_dimers(const SnakeGraph& g);
std::vector<DoubleDimerCover> enumerate_double_dimers(const SnakeGraph& g);

DoubleDimerCover superpose(const SnakeGraph& g, const DimerCover& a, const DimerCover& b);
bool is_double_dimer_cover(const SnakeGraph& g, const DoubleDimerCover& m);

// Cycles formed by the multiplicity-one edges, ordered by first tile.
std::vector<Cycle> cycles(const SnakeGraph& g, const DoubleDimerCover& m);

struct Classification {
  bool R = false, T = false, tr = false;
  bool r() const { return R || tr; }
  bool t() const { return T || tr; }
};

Classification classify(const DoubleDimerCover& m, const SnakeGraph& g);

// Zero coefficient when an odd generator repeats.
SuperTerm weight(const DoubleDimerCover& m, const SnakeGraph& g, const PositiveOrder& order);
SuperTerm dimer_weight(const DimerCover& m, const SnakeGraph& g);

using CoverFilter = std::function<bool(const DoubleDimerCover&)>;
SuperPoly weight_sum(const SnakeGraph& g, const PositiveOrder& order,
                     const CoverFilter& keep = nullptr);

SuperPoly lambda_expansion(const ArcContext& c);
SuperPoly lambda_expansion(const Triangulation& t, Arc arc);

// √(d f)·φ where φ is the triangle (a, b, c_N) obtained after flipping every
// diagonal crossed by the arc (a, b), d = (a, c_N), f = (a, b).
struct MuExpansion {
  SuperPoly value;
  bool top_fan_left = true;
  int top_center = 0;   // c_N, restricted numbering
  int a_label = 0;      // side (c_N, b) of the last triangle
  int b_label = 0;      // other boundary side of the last triangle
  int e_label = 0;      // last crossed diagonal
};

MuExpansion mu_expansion(const ArcContext& c);
MuExpansion mu_expansion(const Triangulation& t, Arc arc);

}  // namespace sl
