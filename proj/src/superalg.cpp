#include "superlambda/superalg.hpp"

#include <algorithm>
#include <sstream>

namespace sl {

// ---- EvenMonomial ----

EvenMonomial EvenMonomial::gen(int g, int twice_exp) {
  EvenMonomial m;
  if (twice_exp != 0) m.f_.push_back({g, twice_exp});
  return m;
}

EvenMonomial EvenMonomial::from_factors(std::vector<Factor> f) {
  std::sort(f.begin(), f.end());
  EvenMonomial m;
  for (const auto& [g, e] : f) {
    if (!m.f_.empty() && m.f_.back().first == g)
      m.f_.back().second += e;
    else
      m.f_.push_back({g, e});
    if (m.f_.back().second == 0) m.f_.pop_back();
  }
  return m;
}

int EvenMonomial::twice_exponent(int g) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), Factor{g, INT32_MIN});
  return (it != f_.end() && it->first == g) ? it->second : 0;
}

static std::vector<EvenMonomial::Factor> merge_factors(const std::vector<EvenMonomial::Factor>& a,
                                                       const std::vector<EvenMonomial::Factor>& b,
                                                       int sign_b) {
  std::vector<EvenMonomial::Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, sign_b * b[j].second});
      ++j;
    } else {
      int e = a[i].second + sign_b * b[j].second;
      if (e != 0) out.push_back({a[i].first, e});
      ++i;
      ++j;
    }
  }
  return out;
}

EvenMonomial EvenMonomial::operator*(const EvenMonomial& o) const {
  EvenMonomial m;
  m.f_ = merge_factors(f_, o.f_, 1);
  return m;
}

EvenMonomial EvenMonomial::operator/(const EvenMonomial& o) const {
  EvenMonomial m;
  m.f_ = merge_factors(f_, o.f_, -1);
  return m;
}

EvenMonomial EvenMonomial::inverse() const {
  EvenMonomial m = *this;
  for (auto& f : m.f_) f.second = -f.second;
  return m;
}

std::optional<EvenMonomial> EvenMonomial::pow_half(int k) const {
  EvenMonomial m;
  if (k == 0) return m;
  for (const auto& [g, e] : f_) {
    long long t = static_cast<long long>(e) * k;
    if (t % 2 != 0) return std::nullopt;
    m.f_.push_back({g, static_cast<int>(t / 2)});
  }
  return m;
}

int lex_compare(const EvenMonomial& a, const EvenMonomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int ga = i < fa.size() ? fa[i].first : INT32_MAX;
    int gb = j < fb.size() ? fb[j].first : INT32_MAX;
    int g = std::min(ga, gb);
    int ea = ga == g ? fa[i++].second : 0;
    int eb = gb == g ? fb[j++].second : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// ---- PositiveOrder ----

PositiveOrder::PositiveOrder(std::vector<int> greatest_first) : seq_(std::move(greatest_first)) {
  for (int i = 0; i < static_cast<int>(seq_.size()); ++i) rank_[seq_[i]] = i;
}

int PositiveOrder::rank(int g) const {
  if (seq_.empty()) return g;
  auto it = rank_.find(g);
  if (it == rank_.end())
    throw std::out_of_range("odd generator " + std::to_string(g) + " not in positive order");
  return it->second;
}

NormalizedWord normalize_odd(const std::vector<int>& factors, const PositiveOrder& order) {
  std::vector<std::pair<int, int>> keyed;
  keyed.reserve(factors.size());
  for (int g : factors) keyed.push_back({order.rank(g), g});
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (keyed[j - 1].first == keyed[j].first) return {0, {}};
      if (keyed[j - 1].first < keyed[j].first) break;
      std::swap(keyed[j - 1], keyed[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i - 1].first == keyed[i].first) return {0, {}};
  NormalizedWord out{sign, {}};
  for (const auto& k : keyed) out.word.push_back(k.second);
  return out;
}

// ---- SuperPoly ----

SuperPoly SuperPoly::constant(const Rational& c) { return monomial(c, EvenMonomial{}); }

SuperPoly SuperPoly::even_gen(int g, int twice_exp) {
  return monomial(1, EvenMonomial::gen(g, twice_exp));
}

SuperPoly SuperPoly::odd_gen(int g) { return monomial(1, EvenMonomial{}, OddWord{g}); }

SuperPoly SuperPoly::monomial(const Rational& c, const EvenMonomial& m, OddWord w) {
  SuperPoly p;
  p.add_term(c, m, w);
  return p;
}

SuperPoly SuperPoly::from_term(const SuperTerm& t) { return monomial(t.coeff, t.even, t.odd); }

void SuperPoly::add_term(const Rational& c, const EvenMonomial& m, const OddWord& w) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{m, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<SuperTerm> SuperPoly::term_list() const {
  std::vector<SuperTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({c, k.first, k.second});
  return out;
}

SuperTerm SuperPoly::leading() const {
  const auto& [k, c] = *terms_.begin();
  return {c, k.first, k.second};
}

int SuperPoly::max_odd_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.second.size()));
  return d;
}

SuperPoly SuperPoly::odd_degree_part(int d) const {
  SuperPoly out;
  for (const auto& [k, c] : terms_)
    if (static_cast<int>(k.second.size()) == d) out.terms_.emplace(k, c);
  return out;
}

bool SuperPoly::odd_degree_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return static_cast<int>(kv.first.second.size()) == d; });
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
  return *this;
}

SuperPoly SuperPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  SuperPoly out = *this;
  for (auto& [k, v] : out.terms_) v *= c;
  return out;
}

SuperPoly SuperPoly::times_monomial(const EvenMonomial& m) const {
  SuperPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first * m, k.second}, c);
  return out;
}

SuperPoly mul(const SuperPoly& p, const SuperPoly& q, const PositiveOrder& order) {
  SuperPoly out;
  std::vector<int> buf;
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kq, cq] : q.terms()) {
      buf = kp.second;
      buf.insert(buf.end(), kq.second.begin(), kq.second.end());
      NormalizedWord nw = kq.second.empty() || kp.second.empty()
                              ? NormalizedWord{1, buf}
                              : normalize_odd(buf, order);
      if (nw.sign == 0) continue;
      Rational c = cp * cq;
      if (nw.sign < 0) c = -c;
      out.add_term(c, kp.first * kq.first, nw.word);
    }
  }
  return out;
}

SuperPoly power(const SuperPoly& p, int k, const PositiveOrder& order) {
  SuperPoly out = SuperPoly::constant(1);
  for (int i = 0; i < k; ++i) out = mul(out, p, order);
  return out;
}

SuperTerm toggle(const SuperTerm& t, int k, const PositiveOrder& order) {
  SuperTerm out = t;
  auto it = std::find(out.odd.begin(), out.odd.end(), k);
  if (it != out.odd.end()) {
    out.odd.erase(it);
    return out;
  }
  int r = order.rank(k);
  auto pos = std::find_if(out.odd.begin(), out.odd.end(),
                          [&](int g) { return order.rank(g) > r; });
  out.odd.insert(pos, k);
  return out;
}

SuperPoly toggle(const SuperPoly& p, int k, const PositiveOrder& order) {
  SuperPoly out;
  for (const auto& t : p.term_list()) out.add_term(toggle(t, k, order));
  return out;
}

SuperPoly divide_by_monomial(const SuperPoly& p, const EvenMonomial& m) {
  return p.times_monomial(m.inverse());
}

namespace {

using EvenPoly = std::map<EvenMonomial, Rational>;

// Exact division of even Laurent polynomials by leading-term reduction under
// dense lex. The quotient's exponents are confined to a box determined by the
// per-variable extreme degrees, which bounds the loop when division fails.
std::optional<EvenPoly> divide_even(EvenPoly p, const EvenPoly& l) {
  if (l.empty()) return std::nullopt;
  auto lead = [](const EvenPoly& x) {
    auto best = x.begin();
    for (auto it = x.begin(); it != x.end(); ++it)
      if (lex_compare(it->first, best->first) > 0) best = it;
    return best;
  };
  auto extremes = [](const EvenPoly& x, std::map<int, std::pair<int, int>>& box) {
    std::map<int, bool> seen;
    for (const auto& [m, c] : x)
      for (const auto& [g, e] : m.factors()) seen[g] = true;
    for (const auto& [g, _] : seen) {
      int lo = INT32_MAX, hi = INT32_MIN;
      for (const auto& [m, c] : x) {
        int e = m.twice_exponent(g);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      box[g] = {lo, hi};
    }
  };
  std::map<int, std::pair<int, int>> bp, bl;
  extremes(p, bp);
  extremes(l, bl);
  auto lookup = [](const std::map<int, std::pair<int, int>>& b, int g) {
    auto it = b.find(g);
    return it == b.end() ? std::pair<int, int>{0, 0} : it->second;
  };
  auto lt = lead(l);
  EvenPoly q;
  while (!p.empty()) {
    auto pt = lead(p);
    EvenMonomial qm = pt->first / lt->first;
    Rational qc = pt->second / lt->second;
    std::map<int, bool> vars;
    for (const auto& [g, e] : qm.factors()) vars[g] = true;
    for (const auto& [g, _] : bp) vars[g] = true;
    for (const auto& [g, _] : bl) vars[g] = true;
    for (const auto& [g, _] : vars) {
      auto [plo, phi] = lookup(bp, g);
      auto [llo, lhi] = lookup(bl, g);
      int e = qm.twice_exponent(g);
      if (e < plo - llo || e > phi - lhi) return std::nullopt;
    }
    q[qm] += qc;
    for (const auto& [m, c] : l) {
      EvenMonomial pm = qm * m;
      auto& slot = p[pm];
      slot -= qc * c;
      if (slot == 0) p.erase(pm);
    }
  }
  for (auto it = q.begin(); it != q.end();) it = it->second == 0 ? q.erase(it) : std::next(it);
  return q;
}

}  // namespace

std::optional<SuperPoly> try_divide(const SuperPoly& p, const SuperPoly& q,
                                    const PositiveOrder& order) {
  if (q.is_zero()) return std::nullopt;
  if (q.is_single_term() && q.leading().odd.empty()) {
    SuperTerm t = q.leading();
    return divide_by_monomial(p, t.even).scaled(1 / t.coeff);
  }
  SuperPoly body = q.body();
  if (body.is_zero()) return std::nullopt;
  EvenPoly l;
  for (const auto& [k, c] : body.terms()) l[k.first] = c;

  SuperPoly r;
  int maxd = p.max_odd_degree();
  for (int d = 0; d <= maxd; ++d) {
    SuperPoly residual = (p - mul(q, r, order)).odd_degree_part(d);
    std::map<OddWord, EvenPoly> by_word;
    for (const auto& [k, c] : residual.terms()) by_word[k.second][k.first] = c;
    for (auto& [w, ep] : by_word) {
      auto quo = divide_even(std::move(ep), l);
      if (!quo) return std::nullopt;
      for (const auto& [m, c] : *quo) r.add_term(c, m, w);
    }
  }
  if (!(mul(q, r, order) == p)) return std::nullopt;
  return r;
}

SuperPoly divide(const SuperPoly& p, const SuperPoly& q, const PositiveOrder& order) {
  auto r = try_divide(p, q, order);
  if (!r) throw Error(ErrorKind::non_exact_division, "division is not exact in the Laurent ring");
  return *r;
}

namespace {

bool rational_sqrt(const Rational& c, Rational& out) {
  if (c < 0) return false;
  mpz_class n = c.get_num(), d = c.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

// b^{k/2} for an even binding b.
SuperPoly binding_power(const SuperPoly& b, int k, const PositiveOrder& order) {
  if (k > 0 && k % 2 == 0) return power(b, k / 2, order);
  if (!b.is_single_term() || !b.leading().odd.empty())
    throw Error(ErrorKind::non_monomial_inverse,
                "negative or half power of a non-monomial binding");
  SuperTerm t = b.leading();
  auto m = t.even.pow_half(k);
  Rational root = t.coeff;
  if (k % 2 != 0 && !rational_sqrt(t.coeff, root))
    throw Error(ErrorKind::non_monomial_inverse, "half power of a non-square coefficient");
  if (!m) throw Error(ErrorKind::non_monomial_inverse, "half power of a non-square monomial");
  int whole = k % 2 != 0 ? k : k / 2;  // exponent applied to `root`
  Rational c = 1;
  for (int i = 0; i < std::abs(whole); ++i) c *= root;
  if (whole < 0) c = 1 / c;
  return SuperPoly::monomial(c, *m);
}

}  // namespace

SuperPoly substitute(const SuperPoly& p, const Bindings& b, const PositiveOrder& order) {
  SuperPoly out;
  for (const auto& t : p.term_list()) {
    SuperPoly acc = SuperPoly::constant(t.coeff);
    EvenMonomial untouched;
    for (const auto& [g, e] : t.even.factors()) {
      auto it = b.find(GeneratorId{Parity::even, g});
      if (it == b.end())
        untouched = untouched * EvenMonomial::gen(g, e);
      else
        acc = mul(acc, binding_power(it->second, e, order), order);
    }
    acc = acc.times_monomial(untouched);
    for (int g : t.odd) {
      auto it = b.find(GeneratorId{Parity::odd, g});
      acc = mul(acc, it == b.end() ? SuperPoly::odd_gen(g) : it->second, order);
    }
    out += acc;
  }
  return out;
}

// ---- Alphabet and text form ----

int Alphabet::even(const std::string& name) {
  auto [it, inserted] = even_idx_.try_emplace(name, static_cast<int>(even_.size()));
  if (inserted) even_.push_back(name);
  return it->second;
}

int Alphabet::odd(const std::string& name) {
  auto [it, inserted] = odd_idx_.try_emplace(name, static_cast<int>(odd_.size()));
  if (inserted) odd_.push_back(name);
  return it->second;
}

std::optional<int> Alphabet::find_even(const std::string& name) const {
  auto it = even_idx_.find(name);
  if (it == even_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Alphabet::find_odd(const std::string& name) const {
  auto it = odd_idx_.find(name);
  if (it == odd_idx_.end()) return std::nullopt;
  return it->second;
}

std::string monomial_text(const EvenMonomial& m, const Alphabet& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : m.factors()) {
    if (!first) os << " * ";
    first = false;
    os << a.even_name(g);
    if (e == 2) continue;
    if (e % 2 == 0)
      os << "^{" << e / 2 << "}";
    else
      os << "^{" << e << "/2}";
  }
  return os.str();
}

static std::string term_body(const Rational& abs_coeff, const EvenMonomial& m, const OddWord& w,
                             const Alphabet& a) {
  std::vector<std::string> parts;
  bool bare = m.is_one() && w.empty();
  if (abs_coeff != 1 || bare) parts.push_back(abs_coeff.get_str());
  if (!m.is_one()) parts.push_back(monomial_text(m, a));
  if (!w.empty()) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + a.odd_name(w[i]);
    parts.push_back(s);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

std::string to_text(const SuperTerm& t, const Alphabet& a) {
  Rational mag = abs(t.coeff);
  return (t.coeff < 0 ? "-" : "") + term_body(mag, t.even, t.odd, a);
}

std::string to_text(const SuperPoly& p, const Alphabet& a) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Rational mag = abs(c);
    std::string body = term_body(mag, k.first, k.second, a);
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace sl
