#pragma once

#include <cstdint>
#include <utility>

#include "selfsim/defining.hpp"

namespace selfsim {

// Entry formula of a Pascal-triangle defining matrix:
//   BinomLift:   C(i+j, i) mod p, as integers 0..p-1
//   Legendre:    Legendre symbol of C(i+j, i) mod p
//   Lower:       C(i, j) mod p
//   LowerSigned: (-1)^{i+j} (C(i, j) mod p)
enum class PascalKind { BinomLift, Legendre, Lower, LowerSigned };

// C(n, k) mod p via the digit-product congruence over base-p digits.
Fp binom_mod_p(const Int& n, const Int& k, std::uint64_t p);

// 0 / +1 / -1 for zero, nonzero square, non-square mod p (Euler criterion).
int legendre_symbol(const Int& a, std::uint64_t p);

// p x p defining matrix with entries per kind, over Q by default.
Defining<Rat> pascal_defining(std::uint64_t p, PascalKind kind);
// Same, with GF(p) entries (the finite-field viewpoint; Legendre values
// embed as 0, 1, p-1).
Defining<Fp> pascal_defining_gf(std::uint64_t p, PascalKind kind);

// The integer binomial lower-triangular seed over Q for any base b:
// entries C(i, j), unreduced, or (-1)^{i+j} C(i, j) when signed_entries.
Defining<Rat> binomial_lower_defining(int b, bool signed_entries = false);

// Thue-Morse bit: parity of the number of ones of k in binary.
int thue_morse(const Int& k);

// On-demand Thue-Morse bits s0, s1, ...
class ThueMorseStream {
 public:
  int next() { return thue_morse(next_++); }
  const Int& position() const { return next_; }

 private:
  Int next_{0};
};

// Closed-form determinant of the p = 2 Pascal self-similar matrix:
// det(M(2m)) = (-1)^m, det(M(2m+1)) = (-1)^{m + s_m}.  Pre: n >= 1.
int det_pascal2_closed(const Int& n);

// mu_k = (-1)^{base-b digit sum of k}; the first column of the inverse of
// the binomial lower-triangular self-similar matrix.
struct MuVector {
  int base;
  std::vector<int> entries;  // values in {-1, +1}
};
MuVector mu_vector(int b, std::size_t n);

// For odd b and n >= 1: the digit-dominated binomial products
// prod_i C(nu_i, kappa_i) summed over even k and over odd k.  Both sums
// equal 2^{(sum nu_i) - 1}.
std::pair<Int, Int> mu_partition_sums(int b, const Int& n);

// Integer Pascal matrices L_{ij} = C(i,j), R_{ij} = (-1)^{i+j} C(i,j),
// S_{ij} = C(i+j,i), satisfying L R = I, S = L L^t, S^{-1} = R^t R and
// L = exp(A) for the subdiagonal A(i, i-1) = i.
struct PascalTrio {
  SquareMat<Rat> lower;         // L
  SquareMat<Rat> lower_signed;  // R = L^{-1}
  SquareMat<Rat> symmetric;     // S
};
PascalTrio pascal_integer_trio(std::size_t n, std::size_t cap = kDenseCap);

// Digit criterion for det(M(n)) = 0 on the p = 7 Legendre matrix, applied
// to m = n-1 in base 7: some digit equals 1, or some digit equals 2 with a
// strictly lower-position digit other than 6.
bool vanishing_p7(const Int& n);

}  // namespace selfsim
