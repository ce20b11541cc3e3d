#include "selfsim/perturbation.hpp"

#include <optional>
#include <random>

namespace selfsim {

namespace {

Defining<RatFun> lift_along(const Defining<Rat>& m, const SquareMat<Rat>& a) {
  std::size_t b = m.tilde.dim();
  SquareMat<RatFun> lifted(b, RatFun());
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      lifted(i, j) = RatFun(Poly({m.tilde(i, j), a(i, j)}), Poly(Rat(1)));
    }
  }
  return Defining<RatFun>(m.base, std::move(lifted));
}

std::optional<PerturbedDefining> try_direction(const Defining<Rat>& m,
                                               const SquareMat<Rat>& a) {
  Defining<RatFun> lifted = lift_along(m, a);
  try {
    LduFactors<RatFun> f = ldu_defining(lifted);
    return PerturbedDefining{m, a, std::move(lifted), std::move(f.diag)};
  } catch (const Degenerate&) {
    return std::nullopt;
  }
}

}  // namespace

PerturbedDefining perturb_with(const Defining<Rat>& m,
                               const SquareMat<Rat>& direction) {
  if (direction.dim() != m.tilde.dim()) {
    throw ShapeMismatch("perturbation direction has wrong size");
  }
  if (!rat_is_zero(direction(0, 0))) {
    throw Error("perturbation direction must have a zero (0,0) entry");
  }
  Defining<RatFun> lifted = lift_along(m, direction);
  LduFactors<RatFun> f = ldu_defining(lifted);  // Degenerate propagates
  return PerturbedDefining{m, direction, std::move(lifted), std::move(f.diag)};
}

PerturbedDefining perturb(const Defining<Rat>& m) {
  int first_singular;
  try {
    ldu_defining(m);
    throw NotDegenerate();
  } catch (const Degenerate& d) {
    first_singular = d.minor_size;
  }
  std::size_t b = m.tilde.dim();
  const Rat zero(0);

  // Deterministic first: a unit at the pivot of the first singular minor
  // (for the classical p = 7 example this is position (1,1)).
  {
    SquareMat<Rat> a(b, zero);
    std::size_t piv = static_cast<std::size_t>(first_singular) - 1;
    a(piv, piv) = Rat(1);
    if (auto p = try_direction(m, a)) return std::move(*p);
  }
  // Then the index grid i*b + j, which is generic enough in practice.
  {
    SquareMat<Rat> a(b, zero);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        a(i, j) = Rat(static_cast<long>(i * b + j));
      }
    a(0, 0) = zero;
    if (auto p = try_direction(m, a)) return std::move(*p);
  }
  // Seeded random retries keep the whole schedule reproducible.
  std::mt19937_64 rng(0x5e1f51u);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int attempt = 0; attempt < 32; ++attempt) {
    SquareMat<Rat> a(b, zero);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        a(i, j) = make_rat(Int(num(rng)), Int(den(rng)));
      }
    a(0, 0) = zero;
    if (auto p = try_direction(m, a)) return std::move(*p);
  }
  throw PerturbationFailed();
}

Rat eval_lifted_at_zero(const std::vector<RatFun>& lifted_diag,
                        const DigitCounts& counts) {
  if (lifted_diag.size() != counts.counts.size()) {
    throw ShapeMismatch("lifted diagonal and digit counts disagree on base");
  }
  Int total_order(0);
  std::vector<RatFun::OrderUnit> parts;
  parts.reserve(lifted_diag.size());
  for (std::size_t k = 0; k < lifted_diag.size(); ++k) {
    RatFun::OrderUnit ou = lifted_diag[k].order_at_zero();
    total_order += Int(ou.order) * counts.counts[k];
    parts.push_back(std::move(ou));
  }
  if (sgn(total_order) < 0) throw NegativePoleOrder();
  if (sgn(total_order) > 0) return Rat(0);
  Int bits(0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    bits += Int(rat_size_bits(parts[k].unit)) * counts.counts[k];
  }
  if (bits > Int(kDefaultBitBudget)) throw BitBudgetExceeded();
  Rat acc(1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    acc *= rat_pow(parts[k].unit, counts.counts[k]);
  }
  return acc;
}

Rat det_at_zero(const PerturbedDefining& p, const Int& n) {
  return eval_lifted_at_zero(p.lifted_diag, digit_counts(n, p.original.base));
}

Rat det_via_perturbation(const Defining<Rat>& m, const Int& n) {
  return det_at_zero(perturb(m), n);
}

}  // namespace selfsim
