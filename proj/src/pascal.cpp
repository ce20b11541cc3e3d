#include "selfsim/pascal.hpp"

namespace selfsim {

namespace {

void require_prime_arg(std::uint64_t p, const char* who) {
  if (!is_prime_u64(p)) {
    throw NotPrime(std::string(who) + ": " + std::to_string(p) +
                   " is not prime");
  }
}

// C(n, k) mod p for digits 0 <= k <= n < p, multiplicative formula.
std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k,
                              std::uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Fp num(p, 1ll);
  Fp den(p, 1ll);
  for (std::uint64_t i = 1; i <= k; ++i) {
    num = num * Fp(p, Int(n - k + i));
    den = den * Fp(p, Int(i));
  }
  return (num / den).value();
}

}  // namespace

Fp binom_mod_p(const Int& n, const Int& k, std::uint64_t p) {
  require_prime_arg(p, "binom_mod_p");
  if (sgn(n) < 0 || sgn(k) < 0) throw Error("binom_mod_p: negative input");
  if (k > n) return Fp(p, 0ll);
  int base_fits = p <= static_cast<std::uint64_t>(INT32_MAX);
  if (!base_fits) {
    // Word-sized but huge primes: a single digit each.
    if (n >= Int(p) || k >= Int(p)) {
      throw Error("binom_mod_p: base-p digits exceed supported range");
    }
    return Fp(p, Int(small_binom_mod(mpz_get_ui(n.get_mpz_t()),
                                     mpz_get_ui(k.get_mpz_t()), p)));
  }
  std::vector<int> dn = digits(n, static_cast<int>(p)).digits;
  std::vector<int> dk = digits(k, static_cast<int>(p)).digits;
  Fp acc(p, 1ll);
  for (std::size_t i = 0; i < dk.size(); ++i) {
    std::uint64_t nu = static_cast<std::uint64_t>(dn[i]);  // dk.size() <= dn.size() since k <= n
    std::uint64_t ka = static_cast<std::uint64_t>(dk[i]);
    if (ka > nu) return Fp(p, 0ll);
    acc = acc * Fp(p, Int(small_binom_mod(nu, ka, p)));
    if (acc.is_zero()) break;
  }
  return acc;
}

int legendre_symbol(const Int& a, std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p)) {
    throw NotOddPrime("legendre_symbol: modulus " + std::to_string(p) +
                      " is not an odd prime");
  }
  Fp x(p, a);
  if (x.is_zero()) return 0;
  std::uint64_t e = pow_mod_u64(x.value(), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

namespace {

// Integer entry value of a Pascal defining matrix at (i, j), before any
// ring embedding: in {0..p-1} for the residue kinds, {-1, 0, 1} scaled
// residues for the signed/Legendre kinds.
long pascal_entry(std::uint64_t p, PascalKind kind, std::uint64_t i,
                  std::uint64_t j) {
  switch (kind) {
    case PascalKind::BinomLift:
      return static_cast<long>(binom_mod_p(Int(i + j), Int(i), p).value());
    case PascalKind::Legendre: {
      if (p == 2) return static_cast<long>(binom_mod_p(Int(i + j), Int(i), p).value());
      Fp r = binom_mod_p(Int(i + j), Int(i), p);
      return legendre_symbol(Int(r.value()), p);
    }
    case PascalKind::Lower:
      return static_cast<long>(binom_mod_p(Int(i), Int(j), p).value());
    case PascalKind::LowerSigned: {
      long v = static_cast<long>(binom_mod_p(Int(i), Int(j), p).value());
      return ((i + j) % 2 == 0) ? v : -v;
    }
  }
  return 0;
}

}  // namespace

Defining<Rat> pascal_defining(std::uint64_t p, PascalKind kind) {
  require_prime_arg(p, "pascal_defining");
  std::size_t b = static_cast<std::size_t>(p);
  SquareMat<Rat> m(b, Rat(0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      m(i, j) = Rat(pascal_entry(p, kind, i, j));
    }
  return Defining<Rat>(static_cast<int>(p), std::move(m));
}

Defining<Fp> pascal_defining_gf(std::uint64_t p, PascalKind kind) {
  require_prime_arg(p, "pascal_defining");
  std::size_t b = static_cast<std::size_t>(p);
  SquareMat<Fp> m(b, Fp(p, 0ll));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      m(i, j) = Fp(p, static_cast<long long>(pascal_entry(p, kind, i, j)));
    }
  return Defining<Fp>(static_cast<int>(p), std::move(m));
}

Defining<Rat> binomial_lower_defining(int b, bool signed_entries) {
  if (b < 2) throw Error("binomial_lower_defining: base must be >= 2");
  std::size_t n = static_cast<std::size_t>(b);
  SquareMat<Rat> m(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i),
                   static_cast<unsigned long>(j));
      if (signed_entries && (i + j) % 2 == 1) c = -c;
      m(i, j) = Rat(c);
    }
  return Defining<Rat>(b, std::move(m));
}

int thue_morse(const Int& k) {
  if (sgn(k) < 0) throw Error("thue_morse: negative index");
  return static_cast<int>(mpz_popcount(k.get_mpz_t()) & 1);
}

int det_pascal2_closed(const Int& n) {
  if (n < 1) throw Error("det_pascal2_closed: n must be >= 1");
  Int half = n / 2;
  int parity = mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
  if (mpz_odd_p(n.get_mpz_t())) parity ^= thue_morse(half);
  return parity ? -1 : 1;
}

MuVector mu_vector(int b, std::size_t n) {
  if (b < 2) throw Error("mu_vector: base must be >= 2");
  if (n < 1) throw Error("mu_vector: length must be >= 1");
  MuVector mu{b, std::vector<int>(n, 1)};
  std::vector<int> cur;  // digit odometer, ascending
  int digit_sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mu.entries[k] = (digit_sum % 2 == 0) ? 1 : -1;
    std::size_t pos = 0;
    for (;;) {
      if (pos == cur.size()) {
        cur.push_back(1);
        ++digit_sum;
        break;
      }
      if (cur[pos] + 1 < b) {
        ++cur[pos];
        ++digit_sum;
        break;
      }
      digit_sum -= cur[pos];
      cur[pos] = 0;
      ++pos;
    }
  }
  return mu;
}

std::pair<Int, Int> mu_partition_sums(int b, const Int& n) {
  if (b % 2 == 0) throw EvenBase();
  if (b < 3) throw Error("mu_partition_sums: base must be >= 3");
  if (n < 1) throw Error("mu_partition_sums: n must be >= 1");
  std::vector<int> nu = digits(n, b).digits;
  // kappa runs over all digitwise-dominated vectors; for odd b the parity
  // of k = sum kappa_i b^i is the parity of the digit sum.
  Int even_sum(0), odd_sum(0);
  std::vector<int> kappa(nu.size(), 0);
  for (;;) {
    Int prod(1);
    int parity = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(nu[i]),
                   static_cast<unsigned long>(kappa[i]));
      prod *= c;
      parity ^= kappa[i] & 1;
    }
    (parity ? odd_sum : even_sum) += prod;
    std::size_t pos = 0;
    while (pos < kappa.size() && kappa[pos] == nu[pos]) {
      kappa[pos] = 0;
      ++pos;
    }
    if (pos == kappa.size()) break;
    ++kappa[pos];
  }
  return {even_sum, odd_sum};
}

PascalTrio pascal_integer_trio(std::size_t n, std::size_t cap) {
  if (n < 1) throw Error("pascal_integer_trio: n must be >= 1");
  if (n > cap) {
    throw SizeLimit("pascal_integer_trio size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
  }
  PascalTrio trio{SquareMat<Rat>(n, Rat(0)), SquareMat<Rat>(n, Rat(0)),
                  SquareMat<Rat>(n, Rat(0))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Int c;
      if (j <= i) {
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i),
                     static_cast<unsigned long>(j));
        trio.lower(i, j) = Rat(c);
        trio.lower_signed(i, j) = ((i + j) % 2 == 0) ? Rat(c) : Rat(-c);
      }
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i + j),
                   static_cast<unsigned long>(i));
      trio.symmetric(i, j) = Rat(c);
    }
  }
  return trio;
}

bool vanishing_p7(const Int& n) {
  if (n < 1) throw Error("vanishing_p7: n must be >= 1");
  std::vector<int> ds = digits(n - 1, 7).digits;
  bool saw_non_six_below = false;  // scanned from position 0 upward
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 1) return true;
    if (ds[i] == 2 && saw_non_six_below) return true;
    if (ds[i] != 6) saw_non_six_below = true;
  }
  return false;
}

}  // namespace selfsim
