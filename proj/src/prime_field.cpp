#include "selfsim/prime_field.hpp"

namespace selfsim {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  // The common case is many elements over one modulus; remember the last
  // validated p to keep construction cheap.
  thread_local std::uint64_t last_ok = 0;
  if (p == last_ok) return;
  if (!is_prime_u64(p)) {
    throw NotPrime("GF(p) modulus " + std::to_string(p) + " is not prime");
  }
  last_ok = p;
}

}  // namespace

Fp::Fp(std::uint64_t p, const Int& value) : p_(p), v_(0) {
  require_prime(p);
  Int r = value % Int(p);
  if (r < 0) r += Int(p);
  v_ = mpz_get_ui(r.get_mpz_t());
}

Fp::Fp(std::uint64_t p, long long value) : Fp(p, Int(static_cast<long>(value))) {}

void Fp::check_same(const Fp& a, const Fp& b) {
  if (a.p_ != b.p_) {
    throw ShapeMismatch("GF(p) arithmetic across distinct moduli " +
                        std::to_string(a.p_) + " and " + std::to_string(b.p_));
  }
}

Fp Fp::operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_, true); }

Fp operator+(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  std::uint64_t s = a.v_ + b.v_;
  if (s >= a.p_ || s < a.v_) s -= a.p_;
  return Fp(a.p_, s, true);
}

Fp operator-(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  return a + (-b);
}

Fp operator*(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  return Fp(a.p_, mul_mod(a.v_, b.v_, a.p_), true);
}

Fp operator/(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  return a * b.inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error("GF(p): inverse of zero");
  return Fp(p_, pow_mod_u64(v_, p_ - 2, p_), true);
}

Fp Fp::pow(const Int& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  if (v_ == 0) return Fp(p_, e == 0 ? 1 : 0, true);
  // Fermat: reduce the exponent mod p-1 for nonzero bases.
  Int r = e % Int(p_ - 1);
  return Fp(p_, pow_mod_u64(v_, mpz_get_ui(r.get_mpz_t()), p_), true);
}

}  // namespace selfsim
