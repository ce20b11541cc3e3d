#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "selfsim/matrix.hpp"

namespace selfsim {

// Hard cap for dense materialization.  Dense paths are oracles and display
// helpers, not the product path.
inline constexpr std::size_t kDenseCap = 4096;

// Base-b digits of n, ascending, minimal (no trailing zero digit).
// 0 is the empty vector; entry evaluation pads with zeros as needed.
struct DigitVector {
  int base;
  std::vector<int> digits;
};

inline DigitVector digits(const Int& n, int base) {
  if (base < 2) throw Error("digits: base must be >= 2");
  if (sgn(n) < 0) throw Error("digits: negative input");
  DigitVector d{base, {}};
  Int q = n;
  while (q != 0) {
    d.digits.push_back(
        static_cast<int>(mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(base))));
    mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(base));
  }
  return d;
}

// The b x b seed of a b-self-similar matrix.  Entry (0,0) must be 1.
template <class T>
struct Defining {
  int base;
  SquareMat<T> tilde;

  Defining(int b, SquareMat<T> m) : base(b), tilde(std::move(m)) {
    if (base < 2) throw Error("defining matrix base must be >= 2");
    if (tilde.dim() != static_cast<std::size_t>(base)) {
      throw ShapeMismatch("defining matrix must be base x base");
    }
    const T& corner = tilde(0, 0);
    for (std::size_t i = 0; i < tilde.dim(); ++i)
      for (std::size_t j = 0; j < tilde.dim(); ++j)
        if (!ring_compatible(corner, tilde(i, j))) {
          throw ShapeMismatch("defining matrix entries span distinct rings");
        }
    if (!ring_is_one(corner)) throw NormalizationError();
  }

  bool operator==(const Defining& o) const {
    return base == o.base && tilde == o.tilde;
  }
};

using AnyDefining = std::variant<Defining<Rat>, Defining<Fp>, Defining<RatFun>>;

// Entry (s,t) of the induced matrix: product of seed entries over the
// digit pairs of s and t, the shorter digit string padded with zeros.
template <class T>
T entry(const Defining<T>& m, const Int& s, const Int& t) {
  std::vector<int> ds = digits(s, m.base).digits;
  std::vector<int> dt = digits(t, m.base).digits;
  std::size_t len = std::max(ds.size(), dt.size());
  T acc = ring_one(m.tilde(0, 0));
  for (std::size_t i = 0; i < len; ++i) {
    int si = i < ds.size() ? ds[i] : 0;
    int ti = i < dt.size() ? dt[i] : 0;
    acc = acc * m.tilde(static_cast<std::size_t>(si), static_cast<std::size_t>(ti));
    if (ring_is_zero(acc)) break;
  }
  return acc;
}

namespace detail {

// Digit strings of 0..n-1, generated by an odometer to avoid n divisions.
inline std::vector<std::vector<int>> digit_table(std::size_t n, int base) {
  std::vector<std::vector<int>> table(n);
  std::vector<int> cur;
  for (std::size_t k = 0; k < n; ++k) {
    table[k] = cur;
    std::size_t pos = 0;
    for (;;) {
      if (pos == cur.size()) {
        cur.push_back(1);
        break;
      }
      if (cur[pos] + 1 < base) {
        ++cur[pos];
        break;
      }
      cur[pos] = 0;
      ++pos;
    }
  }
  return table;
}

}  // namespace detail

// Finite truncation M(n): entries for all 0 <= s, t < n.
template <class T>
SquareMat<T> dense(const Defining<T>& m, std::size_t n,
                   std::size_t cap = kDenseCap) {
  if (n < 1) throw Error("dense: n must be >= 1");
  if (n > cap) {
    throw SizeLimit("dense size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap));
  }
  auto table = detail::digit_table(n, m.base);
  const T one = ring_one(m.tilde(0, 0));
  SquareMat<T> out(n, one);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& ds = table[s];
    for (std::size_t t = 0; t < n; ++t) {
      const auto& dt = table[t];
      std::size_t len = std::max(ds.size(), dt.size());
      T acc = one;
      for (std::size_t i = 0; i < len; ++i) {
        int si = i < ds.size() ? ds[i] : 0;
        int ti = i < dt.size() ? dt[i] : 0;
        acc = acc * m.tilde(static_cast<std::size_t>(si),
                            static_cast<std::size_t>(ti));
        if (ring_is_zero(acc)) break;
      }
      out(s, t) = acc;
    }
  }
  return out;
}

// d-fold Kronecker power of the seed, most significant digit outermost.
// Coincides with dense(m, b^d) because the seed is normalized.
template <class T>
SquareMat<T> kron_power(const Defining<T>& m, int d,
                        std::size_t cap = kDenseCap) {
  if (d < 1) throw Error("kron_power: d must be >= 1");
  std::size_t size = 1;
  for (int i = 0; i < d; ++i) {
    size *= static_cast<std::size_t>(m.base);
    if (size > cap) {
      throw SizeLimit("kron_power size exceeds cap " + std::to_string(cap));
    }
  }
  std::size_t b = static_cast<std::size_t>(m.base);
  SquareMat<T> acc = m.tilde;
  for (int step = 1; step < d; ++step) {
    std::size_t inner = acc.dim();
    SquareMat<T> next(inner * b, ring_zero(m.tilde(0, 0)));
    for (std::size_t ia = 0; ia < b; ++ia)
      for (std::size_t ja = 0; ja < b; ++ja) {
        const T& f = m.tilde(ia, ja);
        if (ring_is_zero(f)) continue;
        for (std::size_t ib = 0; ib < inner; ++ib)
          for (std::size_t jb = 0; jb < inner; ++jb) {
            next(ia * inner + ib, ja * inner + jb) = f * acc(ib, jb);
          }
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace selfsim
