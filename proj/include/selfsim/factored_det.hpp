#pragma once

#include <string>
#include <utility>
#include <vector>

#include "selfsim/digit_stats.hpp"
#include "selfsim/ldu.hpp"

namespace selfsim {

inline constexpr unsigned long kDefaultBitBudget = 1000000;

// det(M(n)) kept factored as prod_k d(k)^{e_k(n)}: the exponents grow like
// n log n, so the expanded value can be astronomically large while the
// factored form stays tiny.
template <class T>
struct FactoredDet {
  std::vector<std::pair<T, Int>> factors;  // (d(k), e_k), k = 0..b-1
};

// The fast determinant: seed LDU once, digit statistics once.
// Degenerate{k} propagates from the LDU gate; callers may then route to the
// perturbation engine.
template <class T>
FactoredDet<T> det_selfsim(const Defining<T>& m, const Int& n) {
  LduFactors<T> f = ldu_defining(m);
  DigitCounts dc = digit_counts(n, m.base);
  FactoredDet<T> out;
  out.factors.reserve(f.diag.size());
  for (std::size_t k = 0; k < f.diag.size(); ++k) {
    out.factors.emplace_back(f.diag[k], dc.counts[k]);
  }
  return out;
}

// Estimated size in bits of the expanded product.
template <class T>
Int expansion_bits(const FactoredDet<T>& f) {
  Int bits(0);
  for (const auto& [base, exp] : f.factors) {
    bits += Int(ring_size_bits(base)) * exp;
  }
  return bits;
}

// Expand to a single exact value.  Guarded: expansion is opt-in and reports
// stay factored when the budget would be blown.
template <class T>
T det_expand(const FactoredDet<T>& f,
             unsigned long bit_budget = kDefaultBitBudget) {
  if (f.factors.empty()) {
    throw Error("det_expand: empty factorization has no ring exemplar");
  }
  if (expansion_bits(f) > Int(bit_budget)) throw BitBudgetExceeded();
  T acc = ring_one(f.factors.front().first);
  for (const auto& [base, exp] : f.factors) {
    if (exp == 0 || ring_is_one(base)) continue;
    acc = acc * ring_pow(base, exp);
  }
  return acc;
}

// "(-2)^6 * (-1/2)^6" -- trivial d(0) = 1 factors and zero exponents are
// dropped; the empty product prints as "1".
template <class T>
std::string factored_str(const FactoredDet<T>& f) {
  std::string s;
  for (const auto& [base, exp] : f.factors) {
    if (exp == 0 || ring_is_one(base)) continue;
    if (!s.empty()) s += " * ";
    s += "(" + ring_str(base) + ")^" + exp.get_str();
  }
  return s.empty() ? "1" : s;
}

}  // namespace selfsim
