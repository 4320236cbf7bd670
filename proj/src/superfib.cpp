#include "superlambda/superfib.hpp"

#include <sstream>

#include "superlambda/oracle.hpp"

namespace sl {

namespace {

SuperTerm factor_term(std::vector<EvenMonomial::Factor> f, std::vector<int> odd, const PositiveOrder& order) {
  std::vector<EvenMonomial::Factor> kept;
  for (auto [g, e] : f)
    if (g != kUnit) kept.push_back({g, e});
  NormalizedWord nw = normalize_odd(odd, order);
  // Odd factors are written in the positive order with coefficient +1.
  return {Rational(nw.sign == 0 ? 0 : 1), EvenMonomial::from_factors(kept), nw.word};
}

EvenMonomial diagonal_product(const SnakeGraph& g) {
  std::vector<EvenMonomial::Factor> f;
  for (const Tile& t : g.tiles())
    if (t.diagonal != kUnit) f.push_back({t.diagonal, 2});
  return EvenMonomial::from_factors(f);
}

}  // namespace

FibAlphabet fib_alphabet(bool symbolic) {
  FibAlphabet f;
  f.sigma = f.names.odd("sigma");
  f.theta = f.names.odd("theta");
  if (symbolic) {
    f.a = f.names.even("a");
    f.b = f.names.even("b");
  }
  f.order = PositiveOrder({f.sigma, f.theta});
  return f;
}

SnakeGraph Gm(int m, const FibAlphabet& f) {
  std::vector<Tile> tiles(m);
  for (int i = 0; i < m; ++i) {
    Tile& t = tiles[i];
    bool odd = i % 2 == 0;
    if (f.symbolic()) {
      t.diagonal = odd ? f.a : f.b;
      t.label[S] = t.label[N] = odd ? f.b : f.a;
    }
    t.corner_bl = odd ? f.sigma : f.theta;
    t.corner_tr = odd ? f.theta : f.sigma;
  }
  return SnakeGraph(tiles, std::string(m - 1, 'R'));
}

SuperNumber partition_function(const SnakeGraph& g, const FibAlphabet& f) {
  SuperPoly p = divide_by_monomial(weight_sum(g, f.order), diagonal_product(g));
  return SuperNumber::from_poly(p, f.sigma, f.theta);
}

SuperNumber partition_transfer(const SnakeGraph& g, const FibAlphabet& f) {
  int m = g.size();
  auto label = [&](int tile, Side s) { return g.edges()[g.edge_id(tile, s)].label; };
  auto vertical = [&](int col) { return col == 0 ? label(1, W) : label(col, E); };
  // P[c]: covers of vertex columns 0..c-1. Tile t spans columns t-1 and t.
  std::vector<SuperPoly> P(m + 2);
  P[0] = SuperPoly::constant(1);
  for (int c = 1; c <= m + 1; ++c) {
    SuperPoly sum = mul(P[c - 1], SuperPoly::from_term(factor_term({{vertical(c - 1), 2}}, {}, f.order)), f.order);
    if (c >= 2) {
      int t = c - 1;
      sum += mul(P[c - 2], SuperPoly::from_term(factor_term({{label(t, S), 2}, {label(t, N), 2}}, {}, f.order)),
                 f.order);
      for (int i = 1; i <= t; ++i) {
        std::vector<EvenMonomial::Factor> fs{{label(i, W), 1}, {label(t, E), 1}};
        for (int u = i; u <= t; ++u) {
          fs.push_back({label(u, S), 1});
          fs.push_back({label(u, N), 1});
        }
        SuperTerm cyc = factor_term(fs, {g.tile(i).corner_bl, g.tile(t).corner_tr}, f.order);
        if (cyc.coeff != 0) sum += mul(P[i - 1], SuperPoly::from_term(cyc), f.order);
      }
    }
    P[c] = sum;
  }
  return SuperNumber::from_poly(divide_by_monomial(P[m + 1], diagonal_product(g)), f.sigma, f.theta);
}

SuperNumber p_value(int m) {
  if (m == 0) return SuperNumber(1);
  static const FibAlphabet f = fib_alphabet(false);
  return partition_transfer(Gm(m, f), f);
}

CoverCensus census(int m) {
  FibAlphabet f = fib_alphabet(false);
  SnakeGraph g = Gm(m, f);
  CoverCensus c;
  for (const auto& d : enumerate_double_dimers(g)) {
    auto cs = cycles(g, d);
    if (cs.empty())
      ++c.cycle_free;
    else if (cs.size() == 1 && (cs[0].last_tile - cs[0].first_tile) % 2 == 0)
      ++c.one_odd_cycle;
    else
      ++c.vanishing;
  }
  return c;
}

Integer fibonacci(int n) {
  Integer a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    Integer t = a + b;
    a = b;
    b = t;
  }
  return a;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ClosedForms closed_forms(int m) {
  ClosedForms c;
  c.x = fibonacci(m + 2);
  for (int j = 0; j <= (m + 1) / 2; ++j) c.x_binomial += binomial(m + 1 - j, j);
  auto g_conv = [](int n) {
    Integer s = 0;
    for (int k = 1; k <= n; ++k) s += fibonacci(k) * fibonacci(n - k + 1);
    return s;
  };
  c.g = g_conv(m);
  for (int j = 1; j <= (m + 1) / 2; ++j) c.g_binomial += j * binomial(m + 1 - j, j);
  for (int j = 0; j <= m / 2; ++j) c.y_gsum += g_conv(m - 2 * j);
  for (int k = 0; k <= m / 2; ++k) c.y_combined += (m - 2 * k) * binomial(m - k + 1, m - 2 * k + 1);
  int h = m / 2;
  if (m % 2 == 0)
    for (int k = 0; k <= h; ++k) c.y_split += (2 * k) * binomial(h + k + 1, 2 * k + 1);
  else
    for (int k = 0; k <= h; ++k) c.y_split += (2 * k + 1) * binomial(h + k + 2, 2 * k + 2);
  return c;
}

FibTables fib_tables(int upto) {
  FibTables t;
  for (int m = 0; m <= upto + 2; ++m) t.F.push_back(fibonacci(m));
  for (int m = 0; m <= upto; ++m) {
    ClosedForms c = closed_forms(m);
    t.x.push_back(c.x);
    t.g.push_back(c.g);
    t.y.push_back(c.y_gsum);
    t.p.push_back(p_value(m));
  }
  t.z.resize(3);
  t.w.resize(2);
  for (int n = 3; 2 * n - 5 <= upto; ++n) t.z.push_back(t.p[2 * n - 5]);
  for (int n = 2; 2 * n - 4 <= upto; ++n) t.w.push_back(t.p[2 * n - 4]);
  return t;
}

bool RecurrenceReport::all_ok() const { return failures() == 0; }

std::size_t RecurrenceReport::failures() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += !l.ok;
  return n;
}

RecurrenceReport recurrence_checks(int upto, int z_upto) {
  RecurrenceReport r;
  auto add = [&](const std::string& name, int i, bool ok) { r.lines.push_back({name, i, ok}); };
  SuperNumber eps = SuperNumber::eps(), one(1);
  std::vector<SuperNumber> p;
  for (int m = 0; m <= std::max(upto, 2 * z_upto - 5); ++m) p.push_back(p_value(m));
  for (int m = 1; m <= upto; ++m) {
    ClosedForms c = closed_forms(m);
    add("x = F(m+2) = binomial sum", m, c.x == c.x_binomial && SuperNumber(Rational(c.x), 0).even_part() == p[m].even_part());
    add("y: g-sum = combined = split = eps part of p", m,
        c.y_gsum == c.y_combined && c.y_gsum == c.y_split && Rational(c.y_gsum) == p[m].eps_value());
    add("g: convolution = binomial sum", m, c.g == c.g_binomial);
    if (m >= 3) add("g recurrence", m, c.g == closed_forms(m - 2).g + closed_forms(m - 1).g + closed_forms(m - 2).x);
    Integer xy = c.x + c.y_gsum, g1 = closed_forms(m + 1).g;
    add("x + y against g(m+1)", m, m % 2 == 0 ? xy == g1 : xy == g1 + 1);
    if (m >= 2) {
      SuperNumber rhs = (one + eps) * p[m - 1] + p[m - 2];
      if (m % 2 == 0) rhs = rhs - eps;
      add("p recurrence", m, p[m] == rhs);
    }
  }
  auto z = [&](int n) { return p[2 * n - 5]; };
  SuperNumber three_2e(3, 2);
  for (int n = 5; n <= z_upto; ++n) {
    add("z affine recurrence", n, z(n) == three_2e * z(n - 1) - z(n - 2) - eps);
    add("z quadratic relation", n, z(n) * z(n - 2) == z(n - 1) * z(n - 1) + z(n - 1) * eps + one);
  }
  auto flips = fibonacci_flip_sequence(one, one, z_upto);
  for (int n = 3; n <= z_upto; ++n) add("z equals flip sequence", n, z(n) == flips[n - 1]);
  return r;
}

RecurrenceReport symbolic_checks(int z_upto) {
  RecurrenceReport r;
  FibAlphabet f = fib_alphabet(true);
  SuperNumber za(SuperPoly::even_gen(f.a), SuperPoly()), zb(SuperPoly::even_gen(f.b), SuperPoly());
  auto flips = fibonacci_flip_sequence(za, zb, z_upto);
  for (int n = 3; n <= z_upto; ++n) {
    SnakeGraph g = Gm(2 * n - 5, f);
    SuperNumber zn = partition_transfer(g, f);
    r.lines.push_back({"weighted z equals flip sequence", n, zn == flips[n - 1]});
    if (2 * n - 5 <= 7) r.lines.push_back({"weighted enumeration equals transfer", n, zn == partition_function(g, f)});
  }
  return r;
}

std::vector<WRow> w_exploration(int n_upto, bool symbolic) {
  FibAlphabet f = fib_alphabet(symbolic);
  std::vector<WRow> rows;
  SuperNumber eps = SuperNumber::eps(), one(1);
  for (int n = 2; n <= n_upto; ++n) {
    WRow row;
    row.n = n;
    row.w = 2 * n - 4 == 0 ? one : partition_transfer(Gm(2 * n - 4, f), f);
    if (rows.size() >= 2) {
      const SuperNumber& a = rows[rows.size() - 1].w;
      const SuperNumber& b = rows[rows.size() - 2].w;
      row.quadratic = row.w * b == a * a + a * eps + one;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string to_text(const SuperNumber& s, const Alphabet& a) {
  std::ostringstream os;
  os << "(" << to_text(s.even_part(), a) << ") + (" << to_text(s.eps_part(), a) << ")*eps";
  return os.str();
}

}  // namespace sl
