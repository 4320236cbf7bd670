#pragma once

// Elements u + v·ε of A[ε]/(ε²), with u and v even Laurent polynomials.

#include "superlambda/superalg.hpp"

namespace sl {

class SuperNumber {
 public:
  SuperNumber() = default;
  SuperNumber(SuperPoly u, SuperPoly v) : u_(std::move(u)), v_(std::move(v)) {}
  explicit SuperNumber(const Rational& u, const Rational& v = 0)
      : u_(SuperPoly::constant(u)), v_(SuperPoly::constant(v)) {}

  const SuperPoly& even_part() const { return u_; }
  const SuperPoly& eps_part() const { return v_; }

  // Rational parts; throws if a part is not a constant.
  Rational even_value() const;
  Rational eps_value() const;

  friend SuperNumber operator+(const SuperNumber& a, const SuperNumber& b) {
    return {a.u_ + b.u_, a.v_ + b.v_};
  }
  friend SuperNumber operator-(const SuperNumber& a, const SuperNumber& b) {
    return {a.u_ - b.u_, a.v_ - b.v_};
  }
  friend SuperNumber operator*(const SuperNumber& a, const SuperNumber& b);
  // Exact quotient; throws NonExactDivision when the even parts do not divide.
  friend SuperNumber operator/(const SuperNumber& a, const SuperNumber& b);
  friend bool operator==(const SuperNumber&, const SuperNumber&) = default;

  static SuperNumber eps() { return SuperNumber(0, 1); }

  // Embed as a SuperPoly using the word σθ for ε.
  SuperPoly to_poly(int sigma, int theta) const;
  static SuperNumber from_poly(const SuperPoly& p, int sigma, int theta);

 private:
  SuperPoly u_, v_;
};

}  // namespace sl
