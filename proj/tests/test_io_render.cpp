#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "superlambda/dimers.hpp"
#include "superlambda/oracle.hpp"
#include "superlambda/render.hpp"
#include "superlambda/verify.hpp"

using namespace sl;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::parse;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Io, TriangulationRoundTrip) {
  auto p = fixtures::load(fixtures::kPentagon);
  Json j = triangulation_json(p.tri, p.names);
  auto q = parse_triangulation(j);
  EXPECT_EQ(triangulation_json(q.tri, q.names), j);
  EXPECT_EQ(j["edge_labels"]["0-2"], "x1");
}

TEST(Io, SeedLabelsIgnoreNames) {
  auto p = parse_triangulation(load_json(fixtures::kPentagon), true);
  EXPECT_FALSE(p.names.find_even("a").has_value());
  EXPECT_FALSE(p.names.find_odd("th1").has_value() && p.names.odd_name(p.tri.triangle_label({0, 1, 2})) != "th1");
}

TEST(Io, ParseErrors) {
  EXPECT_EQ(kind_of([] { load_json("{not json"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_triangulation(load_json(R"({"n":3})")); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_triangulation(load_json(R"({"n":5,"diagonals":[[0,2],[1,3]]})")); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_snake(load_json(R"({"word":"RX"})")); }), ErrorKind::parse);
}

TEST(Io, ArcErrors) {
  EXPECT_EQ(kind_of([] { parse_arc("1,9", 5); }), ErrorKind::arc_invalid);
  EXPECT_EQ(kind_of([] { parse_arc("2,2", 5); }), ErrorKind::arc_invalid);
  EXPECT_EQ(kind_of([] { parse_arc("x", 5); }), ErrorKind::arc_invalid);
  Arc a = parse_arc("1,4", 5);
  EXPECT_EQ(a.from, 1);
  EXPECT_EQ(a.to, 4);
}

TEST(Io, SnakeAndCoverRoundTrip) {
  auto p = fixtures::load(fixtures::kPentagon);
  ArcContext c = make_context(p.tri, {1, 4});
  SnakeGraph g = build_snake(c);
  LabeledSnake s = parse_snake(snake_json(g, p.names));
  EXPECT_EQ(s.graph.word(), g.word());
  EXPECT_EQ(snake_json(s.graph, s.names), snake_json(g, p.names));
  for (const auto& m : enumerate_double_dimers(g)) EXPECT_EQ(parse_cover(cover_json(m, g), g), m);
}

TEST(Io, PolyJson) {
  auto q = fixtures::load(fixtures::kQuad);
  Json j = poly_json(lambda_expansion(q.tri, {1, 3}), q.names);
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_TRUE(j["text"].is_string());
}

TEST(Io, OutputIsStable) {
  auto p = fixtures::load(fixtures::kPentagon);
  std::string a = to_text(lambda_expansion(p.tri, {1, 4}), p.names);
  auto q = fixtures::load(fixtures::kPentagon);
  EXPECT_EQ(to_text(lambda_via_flips(q.tri, {1, 4}), q.names), a);
}

TEST(Render, SingleTileCycle) {
  auto q = fixtures::load(fixtures::kQuad);
  SnakeGraph g = build_snake(q.tri, {1, 3});
  DoubleDimerCover m(g.edges().size(), 1);
  std::string svg = render_svg(g, q.names, &m);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 4u);
  EXPECT_NE(svg.find("sigma"), std::string::npos);
  EXPECT_NE(svg.find("theta"), std::string::npos);
  std::string tikz = render_tikz(g, q.names, &m);
  EXPECT_EQ(count(tikz, "dashed"), 4u);
}

TEST(Render, DoublesAreSolid) {
  auto q = fixtures::load(fixtures::kQuad);
  SnakeGraph g = build_snake(q.tri, {1, 3});
  DoubleDimerCover m(g.edges().size(), 0);
  m[g.edge_id(1, S)] = m[g.edge_id(1, N)] = 2;
  EXPECT_EQ(count(render_svg(g, q.names, &m), "stroke-dasharray"), 0u);
}

TEST(Render, RowAndStaircase) {
  Alphabet a;
  EXPECT_EQ(count(render_tikz(snake_from_word("RR", a), a), "\\draw[thin]"), 10u);
  std::string svg = render_svg(dual(snake_from_word("RRR", a)), a);
  EXPECT_EQ(svg, render_svg(dual(snake_from_word("RRR", a)), a));
}

TEST(Verify, SmallUniverse) {
  VerifyOptions o;
  o.nmax = 6;
  VerifyReport r = verify_universe(o);
  EXPECT_TRUE(r.ok());
  // rotation classes counted directly
  std::size_t classes = 0;
  for (int n = 4; n <= 6; ++n) {
    std::set<std::set<Edge>> seen;
    for (const auto& d : all_triangulations(n)) {
      std::set<Edge> s(d.begin(), d.end());
      if (seen.count(s)) continue;
      ++classes;
      for (int k = 0; k < n; ++k) {
        std::set<Edge> rot;
        for (Edge e : d) rot.insert(make_edge((e.first + k) % n, (e.second + k) % n));
        seen.insert(rot);
      }
    }
  }
  EXPECT_EQ(r.triangulations, classes);
  EXPECT_GE(r.arcs, 15u);
}

TEST(Verify, DetectsCorruption) {
  auto p = fixtures::load(fixtures::kPentagon);
  RouteResults r = four_routes(p.tri, {1, 4});
  ASSERT_TRUE(r.agree());
  r.flip = toggle(r.flip, *p.names.find_odd("th2"), PositiveOrder());
  EXPECT_FALSE(r.agree());
  r = four_routes(p.tri, {1, 4});
  r.tpath = -r.tpath;
  EXPECT_FALSE(r.agree());
}
