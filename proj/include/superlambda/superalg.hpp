#pragma once

// Exact arithmetic in the super algebra Q[x^{±1/2} | θ_k]: Laurent polynomials
// with half-integer exponents in even generators and Grassmann odd generators.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlambda/errors.hpp"

namespace sl {

using Rational = mpq_class;

enum class Parity : unsigned char { even, odd };

struct GeneratorId {
  Parity kind = Parity::even;
  int index = 0;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

// Product of even generators. Exponents are stored doubled, so x^{1/2} has 1.
class EvenMonomial {
 public:
  using Factor = std::pair<int, int>;  // (generator, doubled exponent)

  EvenMonomial() = default;
  static EvenMonomial gen(int g, int twice_exp = 2);
  static EvenMonomial from_factors(std::vector<Factor> f);

  int twice_exponent(int g) const;
  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }

  EvenMonomial operator*(const EvenMonomial& o) const;
  EvenMonomial operator/(const EvenMonomial& o) const;
  EvenMonomial inverse() const;
  // m^{k/2}; fails if some exponent would not stay a half-integer.
  std::optional<EvenMonomial> pow_half(int k) const;

  friend auto operator<=>(const EvenMonomial&, const EvenMonomial&) = default;

 private:
  std::vector<Factor> f_;  // sorted by generator, no zero exponents
};

// Dense lexicographic comparison, a genuine monomial order on Laurent monomials.
int lex_compare(const EvenMonomial& a, const EvenMonomial& b);

using OddWord = std::vector<int>;

// Total order on odd generators. Rank 0 is the greatest element. A default
// constructed order ranks generators by index (lower index is greater).
class PositiveOrder {
 public:
  PositiveOrder() = default;
  explicit PositiveOrder(std::vector<int> greatest_first);

  int rank(int g) const;
  bool greater(int a, int b) const { return rank(a) < rank(b); }
  bool natural() const { return seq_.empty(); }
  const std::vector<int>& sequence() const { return seq_; }

 private:
  std::vector<int> seq_;
  std::map<int, int> rank_;
};

struct NormalizedWord {
  int sign = 0;  // 0 means the product vanishes
  OddWord word;
};

NormalizedWord normalize_odd(const std::vector<int>& factors, const PositiveOrder& order);

struct SuperTerm {
  Rational coeff;
  EvenMonomial even;
  OddWord odd;
  friend bool operator==(const SuperTerm& a, const SuperTerm& b) {
    return a.coeff == b.coeff && a.even == b.even && a.odd == b.odd;
  }
};

class SuperPoly {
 public:
  using Key = std::pair<EvenMonomial, OddWord>;
  using TermMap = std::map<Key, Rational>;

  SuperPoly() = default;
  static SuperPoly constant(const Rational& c);
  static SuperPoly even_gen(int g, int twice_exp = 2);
  static SuperPoly odd_gen(int g);
  static SuperPoly monomial(const Rational& c, const EvenMonomial& m, OddWord w = {});
  static SuperPoly from_term(const SuperTerm& t);

  // `w` must already be sorted in the ambient order.
  void add_term(const Rational& c, const EvenMonomial& m, const OddWord& w);
  void add_term(const SuperTerm& t) { add_term(t.coeff, t.even, t.odd); }

  const TermMap& terms() const { return terms_; }
  std::vector<SuperTerm> term_list() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_single_term() const { return terms_.size() == 1; }
  SuperTerm leading() const;  // first term in key order; requires nonzero

  int max_odd_degree() const;
  SuperPoly odd_degree_part(int d) const;
  SuperPoly body() const { return odd_degree_part(0); }
  bool odd_degree_homogeneous(int d) const;

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  SuperPoly scaled(const Rational& c) const;
  SuperPoly times_monomial(const EvenMonomial& m) const;

  friend bool operator==(const SuperPoly&, const SuperPoly&) = default;

 private:
  TermMap terms_;
};

SuperPoly mul(const SuperPoly& p, const SuperPoly& q, const PositiveOrder& order);
SuperPoly power(const SuperPoly& p, int k, const PositiveOrder& order);

SuperTerm toggle(const SuperTerm& t, int k, const PositiveOrder& order);
SuperPoly toggle(const SuperPoly& p, int k, const PositiveOrder& order);

SuperPoly divide_by_monomial(const SuperPoly& p, const EvenMonomial& m);

// Exact quotient p/q, or nullopt when q does not divide p in the Laurent ring.
std::optional<SuperPoly> try_divide(const SuperPoly& p, const SuperPoly& q,
                                    const PositiveOrder& order);
SuperPoly divide(const SuperPoly& p, const SuperPoly& q, const PositiveOrder& order);

using Bindings = std::map<GeneratorId, SuperPoly>;
SuperPoly substitute(const SuperPoly& p, const Bindings& b, const PositiveOrder& order);

// Generator names used for printing and parsing.
class Alphabet {
 public:
  int even(const std::string& name);  // find or add
  int odd(const std::string& name);
  std::optional<int> find_even(const std::string& name) const;
  std::optional<int> find_odd(const std::string& name) const;
  const std::string& even_name(int g) const { return even_.at(g); }
  const std::string& odd_name(int g) const { return odd_.at(g); }
  int even_count() const { return static_cast<int>(even_.size()); }
  int odd_count() const { return static_cast<int>(odd_.size()); }

 private:
  std::vector<std::string> even_, odd_;
  std::map<std::string, int> even_idx_, odd_idx_;
};

std::string to_text(const SuperPoly& p, const Alphabet& a);
std::string to_text(const SuperTerm& t, const Alphabet& a);
std::string monomial_text(const EvenMonomial& m, const Alphabet& a);

}  // namespace sl
