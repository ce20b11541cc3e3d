#pragma once

#include <string>

#include "selfsim/polynomial.hpp"

namespace selfsim {

// Rational function num/den in canonical form: num and den coprime, den
// monic, and the zero function stored as 0/1.  Canonical form makes
// equality structural.
class RatFun {
 public:
  RatFun() : den_(Rat(1)) {}
  explicit RatFun(const Rat& constant) : num_(constant), den_(Rat(1)) {}
  RatFun(Poly num, Poly den);  // reduces

  // The ratfun_reduce entry point: n/d in canonical form.
  static RatFun reduce(Poly n, Poly d);
  static RatFun t() { return RatFun(Poly::t(), Poly(Rat(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
  // Pre: is_constant().
  Rat constant_value() const { return num_.coeff(0) / den_.coeff(0); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RatFun inverse() const;

  // Decomposition f = t^order * u(t) with u(0) finite and nonzero.
  struct OrderUnit {
    long order;
    Rat unit;  // u(0)
  };
  OrderUnit order_at_zero() const;  // ZeroInput if f = 0
  Rat eval_at_zero() const;         // PoleAtZero if order < 0

  // General evaluation; throws on a pole of the reduced form.
  Rat eval(const Rat& x) const;

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace selfsim
