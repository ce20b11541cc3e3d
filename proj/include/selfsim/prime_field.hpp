#pragma once

#include <cstdint>
#include <string>

#include "selfsim/errors.hpp"
#include "selfsim/rational.hpp"

namespace selfsim {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Element of GF(p) for word-sized prime p.  Every element carries its
// modulus; mixing moduli in arithmetic is a usage error.
class Fp {
 public:
  Fp(std::uint64_t p, const Int& value);
  Fp(std::uint64_t p, long long value);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }

  Fp operator-() const;
  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

  Fp inverse() const;
  Fp pow(const Int& e) const;

  std::string str() const { return std::to_string(v_); }

 private:
  Fp(std::uint64_t p, std::uint64_t v, bool /*raw*/) : p_(p), v_(v) {}
  static void check_same(const Fp& a, const Fp& b);

  std::uint64_t p_;
  std::uint64_t v_;
};

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t mod);

}  // namespace selfsim
