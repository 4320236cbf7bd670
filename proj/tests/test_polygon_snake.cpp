#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "superlambda/snake.hpp"

using namespace sl;
using Names = std::vector<std::string>;

namespace {

// Brute-force chord crossing on points of the unit circle.
bool geometric_cross(int n, Edge p, Edge q) {
  auto pt = [n](int v) { return std::pair<double, double>{std::cos(2 * M_PI * v / n), std::sin(2 * M_PI * v / n)}; };
  auto orient = [](auto a, auto b, auto c) {
    return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
  };
  auto a = pt(p.first), b = pt(p.second), c = pt(q.first), d = pt(q.second);
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) return false;
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

}  // namespace

TEST(Polygon, CrossingSequenceQuadrilateral) {
  auto q = fixtures::load(fixtures::kQuad);
  EXPECT_EQ(crossing_sequence(q.tri, {1, 3}), (std::vector<Edge>{{0, 2}}));
  EXPECT_TRUE(crossing_sequence(q.tri, {0, 1}).empty());
}

TEST(Polygon, CrossingSequenceZigZag) {
  auto h = fixtures::load(fixtures::kHexZigZag);
  EXPECT_EQ(crossing_sequence(h.tri, {4, 1}), (std::vector<Edge>{{3, 5}, {0, 3}, {0, 2}}));
}

TEST(Polygon, SameVertexThrows) {
  auto q = fixtures::load(fixtures::kQuad);
  try {
    crossing_sequence(q.tri, {2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::same_vertex);
  }
}

TEST(Polygon, CrossingCountMatchesGeometry) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& d : all_triangulations(n)) {
      Triangulation t(n, d);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::size_t want = 0;
          for (Edge e : d) want += geometric_cross(n, {i, j}, e);
          EXPECT_EQ(crossing_sequence(t, {i, j}).size(), want);
        }
    }
}

TEST(Polygon, RestrictKeepsCrossedTriangles) {
  Alphabet a;
  Triangulation hex = Triangulation::with_default_labels(6, {{0, 2}, {0, 3}, {0, 4}}, a);
  EXPECT_EQ(restrict_to_arc(hex, {1, 3}).tri.n(), 4);
  Triangulation hept = Triangulation::with_default_labels(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}}, a);
  Restriction r = restrict_to_arc(hept, {1, 4});
  EXPECT_EQ(r.tri.n(), 5);
  EXPECT_EQ(r.tri.diagonals().size(), 2u);
  Restriction full = restrict_to_arc(hex, {1, 5});
  EXPECT_EQ(full.tri.n(), 6);
}

TEST(Polygon, FanDecomposition) {
  auto p = fixtures::load(fixtures::kPentagon);
  ArcContext c = make_context(p.tri, {1, 4});
  EXPECT_EQ(c.fans.centers, (std::vector<int>{1, 0, 4}));
  auto z = fixtures::load(fixtures::kHexZigZag);
  ArcContext cz = make_context(z.tri, {4, 1});
  for (const auto& seg : cz.fans.segments) EXPECT_LE(seg.faces.size(), 2u);
}

TEST(Polygon, SingleFanOrientsAwayFromCenter) {
  Alphabet a;
  Triangulation hept = Triangulation::with_default_labels(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}}, a);
  ArcContext c = make_context(hept, {1, 6});
  ASSERT_EQ(c.fans.centers.size(), 3u);
  for (const auto& [e, head] : c.orientation) EXPECT_NE(c.to_original[head], 0);
}

// With a single crossing either endpoint of the diagonal can serve as the fan
// center, so only arcs with two or more crossings are compared.
TEST(Polygon, ReversingArcReversesOnlyInterFanDiagonals) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& d : all_triangulations(n)) {
      Alphabet names;
      Triangulation t = Triangulation::with_default_labels(n, d, names);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (crossing_sequence(t, {i, j}).size() < 2) continue;
          ArcContext f = make_context(t, {i, j}), b = make_context(t, {j, i});
          std::set<int> centers(f.fans.centers.begin() + 1, f.fans.centers.end() - 1);
          for (const auto& [e, head] : f.orientation) {
            int oe1 = f.to_original[e.first], oe2 = f.to_original[e.second], oh = f.to_original[head];
            // find the same diagonal in the reversed context
            int bh = -1;
            for (const auto& [e2, h2] : b.orientation)
              if (make_edge(b.to_original[e2.first], b.to_original[e2.second]) == make_edge(oe1, oe2))
                bh = b.to_original[h2];
            ASSERT_NE(bh, -1);
            bool inter = centers.count(e.first) && centers.count(e.second);
            EXPECT_EQ(bh != oh, inter);
          }
        }
    }
}

TEST(Polygon, QuadrilateralOrder) {
  auto q = fixtures::load(fixtures::kQuad);
  ArcContext c = make_context(q.tri, {1, 3});
  EXPECT_EQ(c.orientation.at({0, 2}), 2);
  EXPECT_TRUE(c.order.greater(*q.names.find_odd("sigma"), *q.names.find_odd("theta")));
}

TEST(Snake, QuadrilateralSingleTile) {
  auto q = fixtures::load(fixtures::kQuad);
  SnakeGraph g = build_snake(q.tri, {1, 3});
  EXPECT_EQ(g.word(), "");
  EXPECT_EQ(fixtures::side_names(g.tile(1), q.names), (Names{"c", "b", "a", "d"}));
}

TEST(Snake, ZigZagHexagon) {
  auto h = fixtures::load(fixtures::kHexZigZag);
  SnakeGraph g = build_snake(h.tri, {4, 1});
  EXPECT_EQ(g.word(), "RR");
  EXPECT_EQ(fixtures::side_names(g.tile(1), h.names), (Names{"y2", "y3", "x2", "y1"}));
  EXPECT_EQ(fixtures::side_names(g.tile(2), h.names), (Names{"x1", "y6", "x3", "y3"}));
  EXPECT_EQ(fixtures::side_names(g.tile(3), h.names), (Names{"x2", "y4", "y5", "y6"}));
  EXPECT_EQ(h.names.odd_name(g.tile(2).corner_bl), "th2");
  EXPECT_EQ(h.names.odd_name(g.tile(3).corner_tr), "th4");
}

TEST(Snake, FanHexagon) {
  auto h = fixtures::load(fixtures::kHexFan);
  SnakeGraph g = build_snake(h.tri, {4, 2});
  EXPECT_EQ(g.word(), "RU");
  EXPECT_EQ(fixtures::side_names(g.tile(2), h.names), (Names{"x1", "x3", "y4", "y3"}));
  EXPECT_EQ(fixtures::side_names(g.tile(3), h.names), (Names{"y4", "y5", "y6", "x2"}));
}

TEST(Snake, Cross) {
  auto q = fixtures::load(fixtures::kQuad);
  EXPECT_EQ(cross(q.tri, {1, 3}), EvenMonomial::gen(*q.names.find_even("e")));
  EXPECT_TRUE(cross(q.tri, {0, 1}).is_one());
  auto p = fixtures::load(fixtures::kPentagon);
  EXPECT_EQ(cross(p.tri, {1, 4}),
            EvenMonomial::gen(*p.names.find_even("x1")) * EvenMonomial::gen(*p.names.find_even("x2")));
}

TEST(Snake, NoCrossingThrows) {
  auto q = fixtures::load(fixtures::kQuad);
  try {
    build_snake(q.tri, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_crossing);
  }
}

TEST(Snake, DualToggleAndInvolution) {
  Alphabet a;
  SnakeGraph g = snake_from_word("RRR", a);
  SnakeGraph d = dual(g);
  EXPECT_EQ(d.word(), "URU");
  // odd tiles swap N and E, even tiles swap S and W
  EXPECT_EQ(d.tile(1).label[N], g.tile(1).label[E]);
  EXPECT_EQ(d.tile(1).label[E], g.tile(1).label[N]);
  EXPECT_EQ(d.tile(2).label[S], g.tile(2).label[W]);
  EXPECT_EQ(d.tile(2).label[W], g.tile(2).label[S]);
  EXPECT_EQ(dual(snake_from_word("", a)).word(), "");
  for (const char* w : {"", "R", "U", "RU", "URRU", "RRRRR"}) {
    SnakeGraph x = snake_from_word(w, a), y = dual(dual(x));
    EXPECT_EQ(y.word(), x.word());
    for (int i = 1; i <= x.size(); ++i) EXPECT_EQ(y.tile(i).label, x.tile(i).label);
  }
}

TEST(Snake, ParityLemma) {
  // mirror image of the zig-zag fixture
  Alphabet m;
  Triangulation mirrored = Triangulation::with_default_labels(6, {{0, 4}, {0, 3}, {1, 3}}, m);
  ParityReport hz = parity_word_check(make_context(mirrored, {2, 5}));
  EXPECT_TRUE(hz.top_fan_left);
  EXPECT_FALSE(*hz.ends_R);
  auto p = fixtures::load(fixtures::kPentagon);
  ParityReport left = parity_word_check(make_context(p.tri, {1, 4}));
  EXPECT_TRUE(left.top_fan_left);
  EXPECT_TRUE(*left.ends_R);
  ParityReport right = parity_word_check(make_context(p.tri, {4, 1}));
  EXPECT_FALSE(right.top_fan_left);
  EXPECT_FALSE(*right.ends_R);
  for (int n = 5; n <= 9; ++n)
    for (const auto& d : triangulations_up_to_rotation(n)) {
      Alphabet a;
      Triangulation t = Triangulation::with_default_labels(n, d, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && crossing_sequence(t, {i, j}).size() >= 2)
            EXPECT_TRUE(parity_word_check(make_context(t, {i, j})).lemma_holds);
    }
}

TEST(Snake, ReconstructionRoundTrip) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& d : triangulations_up_to_rotation(n)) {
      Alphabet a;
      Triangulation t = Triangulation::with_default_labels(n, d, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || t.is_edge(make_edge(i, j))) continue;
          ArcContext c = make_context(t, {i, j});
          SnakeGraph g = build_snake(c);
          std::set<std::array<int, 3>> got, want;
          for (auto tr : reconstruct_triangles(g)) {
            std::sort(tr.begin(), tr.end());
            got.insert(tr);
          }
          for (const Tri& f : c.faces) {
            std::array<int, 3> l{c.tri.edge_label(make_edge(f[0], f[1])), c.tri.edge_label(make_edge(f[1], f[2])),
                                 c.tri.edge_label(make_edge(f[0], f[2]))};
            std::sort(l.begin(), l.end());
            want.insert(l);
          }
          EXPECT_EQ(got, want);
          EXPECT_TRUE(diagonal_reappearance_holds(g));
        }
    }
}
