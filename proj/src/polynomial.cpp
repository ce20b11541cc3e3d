#include "selfsim/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace selfsim {

Poly::Poly(const Rat& constant) {
  if (!rat_is_zero(constant)) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::t() { return Poly({Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && rat_is_zero(c_.back())) c_.pop_back();
}

Rat Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Rat(0);
}

const Rat& Poly::leading() const {
  assert(!c_.empty());
  return c_.back();
}

std::size_t Poly::valuation() const {
  assert(!c_.empty());
  std::size_t v = 0;
  while (rat_is_zero(c_[v])) ++v;
  return v;
}

Poly Poly::shift_down(std::size_t k) const {
  if (is_zero()) return Poly();
  assert(valuation() >= k);
  return Poly(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (Rat& v : r.c_) v = -v;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (rat_is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& a) {
  if (rat_is_zero(s)) return Poly();
  Poly r(a);
  for (Rat& v : r.c_) v *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(static_cast<std::size_t>(a.deg() - b.deg()) + 1,
                       Rat(0));
  const Rat& lb = b.leading();
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + b.deg())] / lb;
    quo[static_cast<std::size_t>(k)] = q;
    if (rat_is_zero(q)) continue;
    for (int j = 0; j <= b.deg(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

// Integer polynomial scaffolding for the gcd: clear denominators, divide by
// content, keep the leading coefficient positive.
std::vector<Int> primitive_int(const Poly& p) {
  Int lcm_den(1);
  for (const Rat& c : p.coeffs()) {
    Int den = c.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> v;
  v.reserve(p.coeffs().size());
  Int content(0);
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * Rat(lcm_den);
    v.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            v.back().get_mpz_t());
  }
  if (content > 1) {
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  if (!v.empty() && sgn(v.back()) < 0) {
    for (Int& x : v) x = -x;
  }
  return v;
}

void make_primitive(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (v.empty()) return;
  Int content(0);
  for (const Int& x : v) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  }
  if (content > 1) {
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  if (sgn(v.back()) < 0) {
    for (Int& x : v) x = -x;
  }
}

// Pseudo-remainder: repeatedly kill the leading term of a with multiples of
// b.  Content is stripped by the caller, so the extra lc(b) factors are
// harmless for gcd purposes.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int la = a.back();
    std::size_t shift = a.size() - b.size();
    for (Int& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Int> u = primitive_int(a);
  std::vector<Int> v = primitive_int(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Int> r = pseudo_rem(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rat> c;
  c.reserve(u.size());
  for (const Int& x : u) c.emplace_back(x);
  return Poly(std::move(c)).monic();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  Rat inv = Rat(1) / leading();
  return inv * *this;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (rat_is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rat mag = abs(c);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    bool unit_mag = rat_is_one(mag);
    if (i == 0 || !unit_mag) s += mag.get_str();
    if (i > 0) {
      if (!unit_mag) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace selfsim
