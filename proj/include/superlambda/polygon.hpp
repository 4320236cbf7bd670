#pragma once

// Triangulated polygons, crossing sequences, fans, default orientation and the
// positive order on triangles.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "superlambda/superalg.hpp"

namespace sl {

using Edge = std::pair<int, int>;  // normalized: first < second
using Tri = std::array<int, 3>;    // sorted vertex triple

Edge make_edge(int u, int v);
Tri make_tri(int a, int b, int c);

// Vertices 0..n-1 counterclockwise on a circle.
bool chords_cross(int n, Edge p, Edge q);
bool ccw(int n, int p, int q, int r);
// Vertex w lies to the right of the directed chord u -> v.
inline bool right_of(int n, int u, int v, int w) { return !ccw(n, u, v, w); }
int third_vertex(const Tri& t, Edge e);

struct Arc {
  int from = 0;
  int to = 0;
};

class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n, std::vector<Edge> diagonals);

  // Labels x1..x_{2n-3} (boundary edges first, then diagonals) and th1..th_{n-2}.
  static Triangulation with_default_labels(int n, std::vector<Edge> diagonals, Alphabet& a);

  int n() const { return n_; }
  const std::vector<Edge>& diagonals() const { return diagonals_; }
  const std::vector<Tri>& triangles() const { return triangles_; }
  std::vector<Edge> edges() const;  // boundary edges then diagonals

  bool is_boundary(Edge e) const;
  bool is_diagonal(Edge e) const;
  bool is_edge(Edge e) const { return is_boundary(e) || is_diagonal(e); }
  bool is_triangle(const Tri& t) const;
  std::vector<Tri> triangles_on(Edge e) const;

  int edge_label(Edge e) const;
  int triangle_label(const Tri& t) const;
  bool has_edge_label(Edge e) const { return edge_labels_.count(e) > 0; }
  void set_edge_label(Edge e, int g) { edge_labels_[e] = g; }
  void set_triangle_label(const Tri& t, int g) { tri_labels_[t] = g; }

  // Replace diagonal `old` by `repl`; triangle labels of the two affected faces are dropped.
  void replace_diagonal(Edge old, Edge repl);

 private:
  void rebuild_triangles();

  int n_ = 0;
  std::vector<Edge> diagonals_;
  std::vector<Tri> triangles_;
  std::map<Edge, int> edge_labels_;
  std::map<Tri, int> tri_labels_;
};

// Diagonals crossed by the chord, ordered from arc.from.
std::vector<Edge> crossing_sequence(const Triangulation& t, Arc arc);

struct Restriction {
  Triangulation tri;
  Arc arc;
  std::vector<int> to_original;  // new vertex -> old vertex
};

Restriction restrict_to_arc(const Triangulation& t, Arc arc);

struct FanSegment {
  int center = 0;
  std::vector<int> faces;  // 0-based positions in the crossing order
};

struct FanDecomposition {
  std::vector<int> centers;  // a, c_1, ..., c_N, b
  std::vector<FanSegment> segments;
};

using DiagOrientation = std::map<Edge, int>;  // diagonal -> head vertex

// Everything derived from a triangulation and an arc crossing at least one
// diagonal, expressed on the restricted triangulation.
struct ArcContext {
  Triangulation tri;
  Arc arc;
  std::vector<int> to_original;
  std::vector<Edge> crossed;      // x_1..x_k
  std::vector<Tri> faces;         // θ_1..θ_{k+1}
  std::vector<int> face_center;   // fan center of each face
  FanDecomposition fans;
  DiagOrientation orientation;
  PositiveOrder order;

  int k() const { return static_cast<int>(crossed.size()); }
  int x_label(int i) const { return tri.edge_label(crossed.at(i - 1)); }      // 1-based
  int theta_label(int i) const { return tri.triangle_label(faces.at(i - 1)); }  // 1-based
  EvenMonomial cross() const;
};

// Which endpoint of the crossed diagonal serves as fan center when the arc
// crosses exactly one diagonal.
enum class QuadCenter { left, right };

ArcContext make_context(const Triangulation& t, Arc arc, QuadCenter quad = QuadCenter::left);

FanDecomposition fan_decomposition(const ArcContext& c);
DiagOrientation default_orientation(const ArcContext& c);
PositiveOrder positive_order(const ArcContext& c, const DiagOrientation& o);

// All triangulations of an n-gon up to rotation.
std::vector<std::vector<Edge>> triangulations_up_to_rotation(int n);
std::vector<std::vector<Edge>> all_triangulations(int n);

}  // namespace sl
