#pragma once

#include <tuple>
#include <vector>

#include "selfsim/defining.hpp"
#include "selfsim/digit_stats.hpp"

namespace selfsim::oracle {

// Exact reference determinant: fraction-free (Bareiss) elimination with row
// pivoting.  Every division is exact, so integer inputs keep integer
// intermediates throughout.
template <class T>
T det_fraction_free(SquareMat<T> m) {
  std::size_t n = m.dim();
  if (n == 0) throw Error("det_fraction_free: empty matrix");
  const T one = ring_one(m(0, 0));
  const T zero = ring_zero(m(0, 0));
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && ring_is_zero(m(r, k))) ++r;
      if (r == n) return zero;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Determinants of every leading principal block in one fraction-free pass
// (no pivoting; valid whenever they are all nonzero, e.g. for dense
// truncations of a non-degenerate self-similar matrix).  Throws on a zero
// leading minor.
template <class T>
std::vector<T> leading_principal_minors(SquareMat<T> m) {
  std::size_t n = m.dim();
  if (n == 0) throw Error("leading_principal_minors: empty matrix");
  const T one = ring_one(m(0, 0));
  std::vector<T> minors;
  minors.reserve(n);
  T prev = one;
  for (std::size_t k = 0; k < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      throw Error("leading_principal_minors: zero leading minor of size " +
                  std::to_string(k + 1));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    minors.push_back(m(k, k));
    prev = m(k, k);
  }
  return minors;
}

// Reference digit counting by explicit enumeration.
DigitCounts digit_counts_brute(const Int& n, int base);

// Scan of l x l blocks of the infinite matrix at consecutive offsets: every
// block with top-left (s, t), 0 <= s <= s_max, 0 <= t <= t_max, whose
// determinant falls outside {-1, 0, 1} is reported.  An empty report means
// the scanned range upheld the conjecture.
template <class T>
struct MinorScanReport {
  int block;
  Int s_max;
  Int t_max;
  std::vector<std::tuple<Int, Int, T>> violations;
};

template <class T>
MinorScanReport<T> minor_scan(const Defining<T>& m, int l, const Int& s_max,
                              const Int& t_max) {
  if (l < 1) throw Error("minor_scan: block size must be >= 1");
  MinorScanReport<T> report{l, s_max, t_max, {}};
  const T one = ring_one(m.tilde(0, 0));
  const T minus_one = -one;
  for (Int s(0); s <= s_max; ++s) {
    for (Int t(0); t <= t_max; ++t) {
      SquareMat<T> block(static_cast<std::size_t>(l), one);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          block(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              entry(m, s + i, t + j);
        }
      T d = det_fraction_free(std::move(block));
      if (!ring_is_zero(d) && !ring_is_one(d) && !(d == minus_one)) {
        report.violations.emplace_back(s, t, std::move(d));
      }
    }
  }
  return report;
}

}  // namespace selfsim::oracle
