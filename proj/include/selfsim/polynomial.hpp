#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/rational.hpp"

namespace selfsim {

// Univariate polynomial in t with rational coefficients, stored ascending.
// The zero polynomial is the empty coefficient list; otherwise the last
// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly t();  // the variable

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  // Index of the lowest nonzero coefficient.  Pre: not zero.
  std::size_t valuation() const;
  // Divide by t^k.  Pre: valuation() >= k or zero.
  Poly shift_down(std::size_t k) const;

  Rat eval(const Rat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Quotient and remainder over Q.  Pre: b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) = 0.  Coefficient blowup is controlled by clearing
  // denominators and working with primitive integer polynomials.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;

  std::string str() const;  // descending powers, e.g. "-2*t - 4"

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace selfsim
