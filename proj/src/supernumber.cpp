#include "superlambda/supernumber.hpp"

namespace sl {

namespace {

Rational constant_of(const SuperPoly& p) {
  if (p.is_zero()) return 0;
  SuperTerm t = p.leading();
  if (p.size() != 1 || !t.even.is_one() || !t.odd.empty())
    throw std::logic_error("super number part is not a rational constant");
  return t.coeff;
}

}  // namespace

Rational SuperNumber::even_value() const { return constant_of(u_); }
Rational SuperNumber::eps_value() const { return constant_of(v_); }

SuperNumber operator*(const SuperNumber& a, const SuperNumber& b) {
  PositiveOrder o;
  return {mul(a.u_, b.u_, o), mul(a.u_, b.v_, o) + mul(a.v_, b.u_, o)};
}

SuperNumber operator/(const SuperNumber& a, const SuperNumber& b) {
  // (u + vε)/(s + tε) = u/s + (v s - u t)/s² ε
  PositiveOrder o;
  SuperPoly q0 = divide(a.u_, b.u_, o);
  SuperPoly q1 = divide(a.v_ - mul(q0, b.v_, o), b.u_, o);
  return {q0, q1};
}

SuperPoly SuperNumber::to_poly(int sigma, int theta) const {
  PositiveOrder o({sigma, theta});
  SuperPoly eps = SuperPoly::monomial(1, EvenMonomial{}, OddWord{sigma, theta});
  return u_ + mul(v_, eps, o);
}

SuperNumber SuperNumber::from_poly(const SuperPoly& p, int sigma, int theta) {
  SuperNumber out;
  for (const auto& t : p.term_list()) {
    if (t.odd.empty())
      out.u_.add_term(t.coeff, t.even, {});
    else if (t.odd == OddWord{sigma, theta})
      out.v_.add_term(t.coeff, t.even, {});
    else if (t.odd == OddWord{theta, sigma})
      out.v_.add_term(-t.coeff, t.even, {});
    else
      throw std::logic_error("term is not in Q[ε]");
  }
  return out;
}

}  // namespace sl
