#pragma once

// Labeled snake graphs built from an arc in a triangulated polygon.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superlambda/polygon.hpp"

namespace sl {

enum Side : int { S = 0, E = 1, N = 2, W = 3 };
enum Corner : int { BL = 0, BR = 1, TR = 2, TL = 3 };

inline constexpr int kUnit = -1;  // edge label standing for the constant 1

struct Tile {
  int index = 0;                              // 1-based
  std::array<int, 4> label{kUnit, kUnit, kUnit, kUnit};  // indexed by Side
  int diagonal = kUnit;
  int corner_bl = -1;  // odd generator θ_index
  int corner_tr = -1;  // odd generator θ_{index+1}
  bool orientation_flipped = false;
  std::array<int, 4> vertex{-1, -1, -1, -1};  // polygon vertex per Corner, -1 if unknown
};

struct Point {
  int x = 0, y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class SnakeGraph {
 public:
  struct GraphEdge {
    int u = 0, v = 0;  // vertex ids
    int label = kUnit;
    std::vector<std::pair<int, Side>> refs;  // (tile, side) aliases
  };

  SnakeGraph() = default;
  SnakeGraph(std::vector<Tile> tiles, std::string word);

  const std::vector<Tile>& tiles() const { return tiles_; }
  const Tile& tile(int i) const { return tiles_.at(i - 1); }  // 1-based
  const std::string& word() const { return word_; }
  int size() const { return static_cast<int>(tiles_.size()); }

  Point origin(int i) const { return origins_.at(i - 1); }
  int num_vertices() const { return static_cast<int>(points_.size()); }
  const Point& point(int v) const { return points_.at(v); }
  int vertex_at(Point p) const;
  int corner_vertex(int tile, Corner c) const;
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int edge_id(int tile, Side s) const { return side_edge_.at(tile - 1)[s]; }

  SnakeGraph prefix(int m) const;

 private:
  std::vector<Tile> tiles_;
  std::string word_;
  std::vector<Point> origins_;
  std::vector<Point> points_;
  std::map<Point, int> point_ids_;
  std::vector<GraphEdge> edges_;
  std::vector<std::array<int, 4>> side_edge_;
};

std::pair<Point, Point> side_points(Point origin, Side s);

SnakeGraph build_snake(const ArcContext& c);
SnakeGraph build_snake(const Triangulation& t, Arc arc);

EvenMonomial cross(const Triangulation& t, Arc arc);

SnakeGraph dual(const SnakeGraph& g);

// Snake graph of a given shape with fresh labels: e1, e2, ... on edges and
// th1..th_{m+1} on tile corners.
SnakeGraph snake_from_word(const std::string& word, Alphabet& a);

struct ParityReport {
  std::optional<bool> ends_R;  // empty for a one-tile graph
  bool odd_triangles = false;
  bool top_fan_left = false;
  bool lemma_holds = true;
};

ParityReport parity_word_check(const ArcContext& c);

// Triangles of the restricted triangulation as label triples, read off the tiles.
std::vector<std::array<int, 3>> reconstruct_triangles(const SnakeGraph& g);

// Each interior diagonal label reappears as the unglued N-or-E side of the tile
// before it and the unglued S-or-W side of the tile after it.
bool diagonal_reappearance_holds(const SnakeGraph& g);

}  // namespace sl
