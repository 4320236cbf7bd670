#pragma once

// Lattice paths and double lattice paths on snake graphs, tile labelings,
// the posets P(G) and P(G) x {0 < 1}, and their order ideals.

#include <cstdint>
#include <string>
#include <vector>

#include "superlambda/dimers.hpp"

namespace sl {

struct LatticePath {
  std::string steps;       // over {R, U}
  std::vector<int> edges;  // edge ids in order
};

using TileLabeling = std::vector<int>;                  // a_i in {0,1,2}, tile i at index i-1
using DoubleLatticePath = std::vector<unsigned char>;    // multiplicity per edge id
using TileSet = std::vector<bool>;                       // tile i at index i-1

// All right/up paths from the bottom-left corner of tile 1 to the top-right
// corner of the last tile.
std::vector<LatticePath> lattice_paths(const SnakeGraph& h);

// The path separating the tiles below it (the set) from the others.
LatticePath path_from_tiles(const SnakeGraph& h, const TileSet& below);
TileSet tiles_below(const SnakeGraph& h, const LatticePath& p);
SuperTerm path_weight(const SnakeGraph& h, const LatticePath& p);

// Dimer covers of g ordered by twists, each with its set of twisted tiles.
struct MatchingLattice {
  std::vector<DimerCover> covers;
  std::vector<TileSet> ideals;
  int index_of(const DimerCover& m) const;
  int index_of(const TileSet& ideal) const;
};

MatchingLattice matching_lattice(const SnakeGraph& g);

// Weight-preserving bijection from dimer covers of g to lattice paths of dual(g).
LatticePath dimer_to_path(const DimerCover& m, const SnakeGraph& g);
LatticePath dimer_to_path(const DimerCover& m, const SnakeGraph& g, const MatchingLattice& lat);

std::vector<TileLabeling> labelings(const SnakeGraph& h);
bool is_labeling(const SnakeGraph& h, const TileLabeling& x);

DoubleLatticePath labeling_to_doublepath(const TileLabeling& x, const SnakeGraph& h);
TileLabeling doublepath_to_labeling(const DoubleLatticePath& p, const SnakeGraph& h);
// Image of pairs of lattice paths, deduplicated.
std::vector<DoubleLatticePath> enumerate_double_paths(const SnakeGraph& h);

SuperTerm doublepath_weight(const DoubleLatticePath& p, const SnakeGraph& h,
                            const PositiveOrder& order);

// Double dimer cover of g for a labeling of dual(g).
DoubleDimerCover labeling_to_double_dimer(const TileLabeling& x, const SnakeGraph& g,
                                          const MatchingLattice& lat);

SuperPoly lattice_expansion(const ArcContext& c);
SuperPoly lattice_expansion(const Triangulation& t, Arc arc);

struct Poset {
  int size = 0;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::vector<std::string> names;
  bool leq(int a, int b) const;
  std::vector<std::vector<bool>> closure() const;
};

// One element per tile: a right step puts the next tile below, an up step above.
Poset tile_poset(const SnakeGraph& h);
// P x {0 < 1}; element (x, l) has index 2x + l.
Poset product_with_chain(const Poset& p);

using OrderIdeal = std::vector<bool>;
std::vector<OrderIdeal> order_ideals(const Poset& p);
bool is_order_ideal(const Poset& p, const OrderIdeal& s);

// label 0 -> neither level, 1 -> level 0, 2 -> both.
OrderIdeal labeling_to_ideal(const TileLabeling& x);

struct IsoWitness {
  std::size_t labelings = 0;
  std::size_t ideals = 0;
  std::size_t cover_relations = 0;
};

// Verifies that labeling_to_ideal is an isomorphism of X(h) onto J(P(h) x 2)
// matching cover relations; throws IsoFailure otherwise.
IsoWitness iso_check(const SnakeGraph& h);

// Covers of X(h): pairs (i, j) where labeling j raises one tile of labeling i by one.
std::vector<std::pair<int, int>> labeling_covers(const std::vector<TileLabeling>& xs);

std::string hasse_dot(const std::vector<TileLabeling>& xs);

}  // namespace sl
