#pragma once

#include <vector>

#include "selfsim/factored_det.hpp"

namespace selfsim {

// A degenerate rational defining matrix lifted to M~ + t*A~ over the field
// of rational functions, together with the direction A~ that worked.
// lifted_diag caches the d(k) of the lift (already computed when verifying
// non-degeneracy); it always equals ldu_defining(lifted).diag.
struct PerturbedDefining {
  Defining<Rat> original;
  SquareMat<Rat> direction;
  Defining<RatFun> lifted;
  std::vector<RatFun> lifted_diag;
};

// Lift a degenerate defining matrix over a generic perturbation direction.
// Directions are tried deterministically: unit matrix at the pivot of the
// first singular leading minor, then an index grid, then seeded random
// rationals.  Throws NotDegenerate if the input needs no perturbation and
// PerturbationFailed if every candidate stays degenerate.
PerturbedDefining perturb(const Defining<Rat>& m);

// Lift along one explicit direction (A(0,0) must be 0).  Throws Degenerate
// if the lift is still degenerate.
PerturbedDefining perturb_with(const Defining<Rat>& m,
                               const SquareMat<Rat>& direction);

// Value at t = 0 of prod_k lifted_d(k)^{e_k}: with d(k) = t^{o_k} u_k(t)
// and N = sum_k o_k e_k, the result is 0 when N > 0 and prod u_k(0)^{e_k}
// when N = 0.  N < 0 cannot happen for a true determinant and raises
// NegativePoleOrder.
Rat eval_lifted_at_zero(const std::vector<RatFun>& lifted_diag,
                        const DigitCounts& counts);

// det(M(n)) of the unperturbed matrix, recovered from the lift.
Rat det_at_zero(const PerturbedDefining& p, const Int& n);

// One-call form: perturb, then evaluate at t = 0.
Rat det_via_perturbation(const Defining<Rat>& m, const Int& n);

}  // namespace selfsim
