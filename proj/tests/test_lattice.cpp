#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "superlambda/dimers.hpp"
#include "superlambda/lattice.hpp"

using namespace sl;

namespace {

std::vector<std::string> all_words(int max_len) {
  std::vector<std::string> out;
  for (int len = 0; len <= max_len; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'U' : 'R';
      out.push_back(w);
    }
  return out;
}

std::size_t brute_labelings(const std::string& w) {
  std::size_t n = w.size() + 1, count = 0, total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> a(n);
    std::size_t c = code;
    for (auto& x : a) {
      x = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) ok = ok && (w[i] == 'R' ? a[i] <= a[i + 1] : a[i] >= a[i + 1]);
    count += ok;
  }
  return count;
}

// The four-tile RRR graph with the labels of the dimer/lattice-path figure.
LabeledSnake figure_rrr() {
  return parse_snake(load_json(R"({"word":"RRR","tiles":[
    {"S":"b","E":"x","N":"j","W":"a"},{"S":"c","E":"y","N":"i","W":"x"},
    {"S":"d","E":"z","N":"h","W":"y"},{"S":"e","E":"f","N":"g","W":"z"}]})"));
}

}  // namespace

TEST(Lattice, SingleTilePaths) {
  Alphabet a;
  EXPECT_EQ(lattice_paths(snake_from_word("", a)).size(), 2u);
}

TEST(Lattice, FigureMatchingToPath) {
  LabeledSnake s = figure_rrr();
  const SnakeGraph& g = s.graph;
  DimerCover m = {g.edge_id(1, W), g.edge_id(1, E), g.edge_id(2, E), g.edge_id(4, S), g.edge_id(4, N)};
  std::sort(m.begin(), m.end());
  auto all = enumerate_dimers(g);
  ASSERT_NE(std::find(all.begin(), all.end(), m), all.end());
  SnakeGraph h = dual(g);
  EXPECT_EQ(h.word(), "URU");
  LatticePath p = dimer_to_path(m, g);
  EXPECT_EQ(p.steps, "URUUR");
  std::vector<std::string> names;
  for (int e : p.edges) names.push_back(s.names.even_name(h.edges()[e].label));
  EXPECT_EQ(names, (std::vector<std::string>{"a", "x", "y", "e", "g"}));
  EXPECT_EQ(path_weight(h, p), dimer_weight(m, g));
}

TEST(Lattice, DimerToPathIsWeightPreservingBijection) {
  for (const auto& w : all_words(5)) {
    Alphabet a;
    SnakeGraph g = snake_from_word(w, a);
    SnakeGraph h = dual(g);
    std::set<std::string> seen;
    for (const auto& m : enumerate_dimers(g)) {
      LatticePath p = dimer_to_path(m, g);
      EXPECT_EQ(path_weight(h, p), dimer_weight(m, g));
      seen.insert(p.steps);
    }
    EXPECT_EQ(seen.size(), lattice_paths(h).size()) << w;
  }
}

TEST(Lattice, LabelingCounts) {
  Alphabet a;
  EXPECT_EQ(labelings(snake_from_word("", a)).size(), 3u);
  EXPECT_EQ(labelings(snake_from_word("RR", a)).size(), 10u);
  EXPECT_EQ(labelings(snake_from_word("UR", a)).size(), 14u);
  for (const auto& w : all_words(6)) EXPECT_EQ(labelings(snake_from_word(w, a)).size(), brute_labelings(w)) << w;
}

TEST(Lattice, ExtremeLabelings) {
  Alphabet a;
  SnakeGraph h = snake_from_word("RUR", a);
  auto paths = lattice_paths(h);
  LatticePath lo = path_from_tiles(h, TileSet(4, false)), hi = path_from_tiles(h, TileSet(4, true));
  DoubleLatticePath zero = labeling_to_doublepath({0, 0, 0, 0}, h), two = labeling_to_doublepath({2, 2, 2, 2}, h);
  for (std::size_t e = 0; e < zero.size(); ++e) {
    bool in_lo = std::find(lo.edges.begin(), lo.edges.end(), static_cast<int>(e)) != lo.edges.end();
    bool in_hi = std::find(hi.edges.begin(), hi.edges.end(), static_cast<int>(e)) != hi.edges.end();
    EXPECT_EQ(zero[e], in_lo ? 2 : 0);
    EXPECT_EQ(two[e], in_hi ? 2 : 0);
  }
}

TEST(Lattice, LabelingRoundTrip) {
  for (const auto& w : all_words(5)) {
    Alphabet a;
    SnakeGraph h = snake_from_word(w, a);
    auto xs = labelings(h);
    auto ps = enumerate_double_paths(h);
    EXPECT_EQ(xs.size(), ps.size()) << w;
    for (const auto& x : xs) EXPECT_EQ(doublepath_to_labeling(labeling_to_doublepath(x, h), h), x);
  }
}

TEST(Lattice, OrderIdealFigure) {
  Alphabet a;
  SnakeGraph h = snake_from_word("RRUR", a);
  Poset p = tile_poset(h);
  // tile 1 above 2 above 3, tile 4 above 3 and 5
  std::set<std::pair<int, int>> covers(p.covers.begin(), p.covers.end());
  EXPECT_EQ(covers, (std::set<std::pair<int, int>>{{1, 0}, {2, 1}, {2, 3}, {4, 3}}));
  TileSet below = {false, true, true, false, true};
  LatticePath path = path_from_tiles(h, below);
  EXPECT_EQ(path.steps, "RURRUR");
  EXPECT_EQ(tiles_below(h, path), below);
  EXPECT_TRUE(is_order_ideal(p, below));
}

TEST(Lattice, PentagonCycleWeights) {
  auto p = fixtures::load(fixtures::kPentagon);
  ArcContext c = make_context(p.tri, {1, 4});
  SnakeGraph h = dual(build_snake(c));
  std::set<OddWord> odd;
  for (const auto& x : labelings(h)) {
    SuperTerm w = doublepath_weight(labeling_to_doublepath(x, h), h, c.order);
    if (!w.odd.empty()) odd.insert(w.odd);
  }
  auto th = [&](const char* n) { return *p.names.find_odd(n); };
  EXPECT_EQ(odd, (std::set<OddWord>{{th("th1"), th("th2")}, {th("th2"), th("th3")}, {th("th1"), th("th3")}}));
  EXPECT_EQ(lattice_expansion(c), lambda_expansion(c));
}

TEST(Lattice, DoubledPathHasNoOddFactor) {
  Alphabet a;
  SnakeGraph h = snake_from_word("RU", a);
  for (const auto& x : labelings(h)) {
    bool doubled = std::all_of(x.begin(), x.end(), [](int v) { return v != 1; });
    if (doubled) EXPECT_TRUE(doublepath_weight(labeling_to_doublepath(x, h), h, {}).odd.empty());
  }
}

TEST(Lattice, SingleTileIdeals) {
  Alphabet a;
  SnakeGraph h = snake_from_word("", a);
  EXPECT_EQ(order_ideals(product_with_chain(tile_poset(h))).size(), 3u);
  IsoWitness w = iso_check(h);
  EXPECT_EQ(w.labelings, 3u);
  EXPECT_EQ(w.cover_relations, 2u);
}

TEST(Lattice, FourteenElementLattice) {
  Alphabet a;
  SnakeGraph h = snake_from_word("UR", a);
  EXPECT_EQ(order_ideals(product_with_chain(tile_poset(h))).size(), 14u);
  EXPECT_EQ(iso_check(h).labelings, 14u);
}

TEST(Lattice, MinimalLabelingIsEmptyIdeal) {
  OrderIdeal id = labeling_to_ideal({0, 0, 0});
  EXPECT_TRUE(std::none_of(id.begin(), id.end(), [](bool b) { return b; }));
}

TEST(Lattice, IsomorphismUpToSixTiles) {
  for (const auto& w : all_words(5)) {
    Alphabet a;
    EXPECT_NO_THROW(iso_check(snake_from_word(w, a))) << w;
  }
}

TEST(Lattice, MeetAndJoinArePointwise) {
  for (const auto& w : all_words(5)) {
    Alphabet a;
    SnakeGraph h = snake_from_word(w, a);
    auto xs = labelings(h);
    std::set<TileLabeling> set(xs.begin(), xs.end());
    for (const auto& x : xs)
      for (const auto& y : xs) {
        TileLabeling lo(x.size()), hi(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          lo[i] = std::min(x[i], y[i]);
          hi[i] = std::max(x[i], y[i]);
        }
        EXPECT_TRUE(set.count(lo) && set.count(hi));
      }
  }
}

TEST(Lattice, HasseDot) {
  Alphabet a;
  std::string dot = hasse_dot(labelings(snake_from_word("", a)));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("->"), std::string::npos);
}
