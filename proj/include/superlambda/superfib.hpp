#pragma once

// Super Fibonacci numbers: double dimer partition functions of the row graphs
// G_m with alternating corner labels σ, θ, and the integer sequences around them.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "superlambda/dimers.hpp"
#include "superlambda/supernumber.hpp"

namespace sl {

using Integer = mpz_class;

// Generators shared by all row graphs. Symbolic alphabets also carry a, b.
struct FibAlphabet {
  Alphabet names;
  int sigma = 0;
  int theta = 0;
  int a = -1;
  int b = -1;
  PositiveOrder order;  // σ > θ
  bool symbolic() const { return a >= 0; }
};

FibAlphabet fib_alphabet(bool symbolic);

// m tiles in a row. Unit labels, or in the symbolic case diagonals a, b, a, ...
// with top and bottom labeled by the other variable.
SnakeGraph Gm(int m, const FibAlphabet& f);

// Sum of weights over D(g) divided by the product of diagonals, by enumeration.
SuperNumber partition_function(const SnakeGraph& g, const FibAlphabet& f);
// Same value by a transfer recursion over vertex columns; g must be a row.
SuperNumber partition_transfer(const SnakeGraph& g, const FibAlphabet& f);
// p_m with unit labels (transfer recursion); p_0 = 1.
SuperNumber p_value(int m);

struct CoverCensus {
  Integer cycle_free = 0;
  Integer one_odd_cycle = 0;
  Integer vanishing = 0;  // covers whose weight is zero
};
CoverCensus census(int m);

Integer fibonacci(int n);  // F_1 = F_2 = 1, F_0 = 0
Integer binomial(long n, long k);

struct ClosedForms {
  Integer x, x_binomial;
  Integer g, g_binomial;
  Integer y_gsum, y_combined, y_split;
};
ClosedForms closed_forms(int m);

struct FibTables {
  std::vector<Integer> F, x, y, g;
  std::vector<SuperNumber> p;  // p[m] for 0 <= m <= upto
  std::vector<SuperNumber> z;  // z[n] = p_{2n-5}, n >= 3
  std::vector<SuperNumber> w;  // w[n] = p_{2n-4}, n >= 2
};
FibTables fib_tables(int upto);

struct CheckLine {
  std::string name;
  int index = 0;
  bool ok = false;
};

struct RecurrenceReport {
  std::vector<CheckLine> lines;
  bool all_ok() const;
  std::size_t failures() const;
};

// Closed forms and recurrences for m <= upto, z_n relations and the flip
// sequence for n <= z_upto.
RecurrenceReport recurrence_checks(int upto, int z_upto);
// Weighted partition functions against the flip sequence seeded with a, b.
RecurrenceReport symbolic_checks(int z_upto);

// Exploratory: even-indexed values and whether they satisfy the z_n relation.
struct WRow {
  int n = 0;
  SuperNumber w;
  bool quadratic = false;
};
std::vector<WRow> w_exploration(int n_upto, bool symbolic);

std::string to_text(const SuperNumber& s, const Alphabet& a);

}  // namespace sl
