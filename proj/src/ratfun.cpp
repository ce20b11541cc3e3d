#include "selfsim/ratfun.hpp"

namespace selfsim {

RatFun::RatFun(Poly num, Poly den) { *this = reduce(std::move(num), std::move(den)); }

RatFun RatFun::reduce(Poly n, Poly d) {
  if (d.is_zero()) throw ZeroDenominator("rational function with denominator 0");
  RatFun f;
  if (n.is_zero()) return f;  // 0/1
  Poly g = Poly::gcd(n, d);
  if (g.deg() > 0) {
    n = Poly::divmod(n, g).first;
    d = Poly::divmod(d, g).first;
  }
  Rat inv_lead = Rat(1) / d.leading();
  f.num_ = inv_lead * n;
  f.den_ = inv_lead * d;
  return f;
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw ZeroDenominator("division by the zero function");
  return RatFun::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of the zero function");
  return reduce(den_, num_);
}

RatFun::OrderUnit RatFun::order_at_zero() const {
  if (is_zero()) throw ZeroInput();
  std::size_t vn = num_.valuation();
  std::size_t vd = den_.valuation();
  // num and den are coprime, so at most one valuation is positive.
  Rat unit = num_.coeff(vn) / den_.coeff(vd);
  return {static_cast<long>(vn) - static_cast<long>(vd), unit};
}

Rat RatFun::eval_at_zero() const {
  if (is_zero()) return Rat(0);
  OrderUnit ou = order_at_zero();
  if (ou.order < 0) throw PoleAtZero();
  return ou.order > 0 ? Rat(0) : ou.unit;
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (rat_is_zero(d)) throw Error("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFun::str() const {
  if (den_ == Poly(Rat(1))) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  if (num_.deg() > 0) n = "(" + n + ")";
  if (den_.deg() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace selfsim
