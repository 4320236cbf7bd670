#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "superlambda/dimers.hpp"
#include "superlambda/oracle.hpp"
#include "superlambda/superfib.hpp"

using namespace sl;
using fixtures::sum;
using fixtures::term;

TEST(SuperFib, RowCorners) {
  FibAlphabet f = fib_alphabet(false);
  SnakeGraph g1 = Gm(1, f);
  EXPECT_EQ(g1.word(), "");
  EXPECT_EQ(g1.tile(1).corner_bl, f.sigma);
  EXPECT_EQ(g1.tile(1).corner_tr, f.theta);
  SnakeGraph g3 = Gm(3, f);
  EXPECT_EQ(g3.word(), "RR");
  EXPECT_EQ(g3.tile(2).corner_bl, f.theta);
  EXPECT_EQ(g3.tile(2).corner_tr, f.sigma);
  EXPECT_EQ(g3.tile(3).corner_bl, f.sigma);
  EXPECT_EQ(g3.tile(3).corner_tr, f.theta);
  for (const Tile& t : g3.tiles())
    for (int l : t.label) EXPECT_EQ(l, kUnit);
}

TEST(SuperFib, SmallValues) {
  EXPECT_EQ(p_value(1), SuperNumber(2, 1));
  EXPECT_EQ(p_value(3), SuperNumber(5, 6));
  FibAlphabet f = fib_alphabet(false);
  EXPECT_EQ(partition_function(Gm(1, f), f), SuperNumber(2, 1));
  EXPECT_EQ(partition_function(Gm(3, f), f), SuperNumber(5, 6));
}

TEST(SuperFib, SymbolicP2) {
  FibAlphabet f = fib_alphabet(true);
  Alphabet& a = f.names;
  SuperPoly u = sum({term(a, {{"a", 2}, {"b", -2}}), term(a, {{"a", -2}, {"b", 2}}), term(a, {{"a", -2}, {"b", -2}})});
  SuperPoly v = sum({term(a, {{"a", -2}}), term(a, {{"b", -2}})});
  EXPECT_EQ(partition_function(Gm(2, f), f), SuperNumber(u, v));
  EXPECT_EQ(partition_transfer(Gm(2, f), f), SuperNumber(u, v));
}

TEST(SuperFib, ClosedForms) {
  EXPECT_EQ(closed_forms(2).g, 2);
  EXPECT_EQ(closed_forms(3).g, 5);
  EXPECT_EQ(closed_forms(3).y_gsum, 6);
  EXPECT_EQ(closed_forms(3).y_combined, 6);
  EXPECT_EQ(closed_forms(3).x, 5);
  EXPECT_EQ(fibonacci(5), 5);
  ClosedForms c1 = closed_forms(1);
  EXPECT_EQ(c1.x + c1.y_gsum, closed_forms(2).g + 1);
  EXPECT_EQ(c1.x + c1.y_gsum, 3);
}

TEST(SuperFib, ConvolutionByHand) {
  // g_m = sum_{i+j=m} F_i F_j over i, j >= 1 (shifted so that g_1 = 1)
  for (int m = 1; m <= 20; ++m) {
    Integer g = 0;
    for (int i = 1; i <= m; ++i) g += fibonacci(i) * fibonacci(m + 1 - i);
    EXPECT_EQ(closed_forms(m).g, g) << m;
  }
}

TEST(SuperFib, EnumerationMatchesTransfer) {
  FibAlphabet f = fib_alphabet(false);
  for (int m = 1; m <= 8; ++m) {
    SnakeGraph g = Gm(m, f);
    EXPECT_EQ(partition_function(g, f), partition_transfer(g, f)) << m;
    CoverCensus c = census(m);
    Integer cycle_free = 0;
    for (const auto& d : enumerate_double_dimers(g)) cycle_free += cycles(g, d).empty();
    EXPECT_EQ(c.cycle_free, cycle_free);
  }
}

TEST(SuperFib, RecurrenceIdentities) {
  FibTables t = fib_tables(12);
  SuperNumber one(1), eps = SuperNumber::eps();
  EXPECT_EQ(t.z[3] * t.z[5], t.z[4] * t.z[4] + t.z[4] * eps + one);
  EXPECT_EQ(t.p[4], (one + eps) * t.p[3] + t.p[2] - eps);
  for (int m = 2; m <= 12; ++m) {
    SuperNumber rhs = (one + eps) * t.p[m - 1] + t.p[m - 2];
    if (m % 2 == 0) rhs = rhs - eps;
    EXPECT_EQ(t.p[m], rhs) << m;
  }
}

TEST(SuperFib, ChecksPass) {
  RecurrenceReport r = recurrence_checks(20, 15);
  EXPECT_TRUE(r.all_ok());
  RecurrenceReport s = symbolic_checks(9);
  EXPECT_TRUE(s.all_ok());
}

TEST(SuperFib, MatchesFlipSequence) {
  FibTables t = fib_tables(25);
  auto z = fibonacci_flip_sequence(SuperNumber(1), SuperNumber(1), 15);
  for (int n = 3; n <= 15; ++n) EXPECT_EQ(t.z[n], z[n - 1]) << n;
}
