#include <gtest/gtest.h>

#include "superlambda/dimers.hpp"
#include "superlambda/recurrences.hpp"

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

}  // namespace

TEST(Recurrences, TerminalStaircase) {
  Alphabet a;
  EXPECT_EQ(terminal_staircase(snake_from_word("RRU", a)), 3);
  EXPECT_EQ(terminal_staircase(snake_from_word("RRR", a)), 2);
  EXPECT_TRUE(is_full_staircase(snake_from_word("RURU", a)));
  EXPECT_TRUE(is_full_staircase(snake_from_word("", a)));
  EXPECT_FALSE(is_full_staircase(snake_from_word("RRU", a)));
}

// The removal lemmas use only the labels of the removed edges, so they hold for
// arbitrary labels; the staircase lemmas need the labels of a triangulation.
TEST(Recurrences, RemovalLemmasOnGenericLabels) {
  for (const auto& w : all_words(5)) {
    Alphabet a;
    SnakeGraph g = snake_from_word(w, a);
    for (const LemmaCheck& l : {check_lemma1(g, {}), check_lemma4(g, {})}) {
      if (!l.applies) continue;
      EXPECT_TRUE(l.holds) << w << " " << l.detail;
      EXPECT_EQ(l.domain, l.image) << w;
    }
  }
}

TEST(Recurrences, FullStaircaseHasOneTopCover) {
  std::size_t staircases = 0;
  for (int n = 4; n <= 9; ++n)
    for (const auto& d : triangulations_up_to_rotation(n)) {
      Alphabet a;
      Triangulation t = Triangulation::with_default_labels(n, d, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || t.is_edge(make_edge(i, j))) continue;
          ArcContext c = make_context(t, {i, j});
          SnakeGraph g = build_snake(c);
          LemmaCheck l = check_lemma3(g, c.order);
          EXPECT_EQ(l.applies, is_full_staircase(g));
          if (!l.applies) continue;
          ++staircases;
          EXPECT_EQ(l.domain, 1u);
          EXPECT_TRUE(l.holds) << l.detail;
        }
    }
  EXPECT_GT(staircases, 0u);
}

TEST(Recurrences, LemmasOnPolygonGraphs) {
  for (int n = 4; n <= 8; ++n)
    for (const auto& d : triangulations_up_to_rotation(n)) {
      Alphabet a;
      Triangulation t = Triangulation::with_default_labels(n, d, a);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || t.is_edge(make_edge(i, j))) continue;
          ArcContext c = make_context(t, {i, j});
          SnakeGraph g = build_snake(c);
          for (const LemmaCheck& l :
               {check_lemma1(g, c.order), check_lemma2(g, c.order), check_lemma3(g, c.order), check_lemma4(g, c.order)})
            if (l.applies) EXPECT_TRUE(l.holds) << l.detail;
        }
    }
}
