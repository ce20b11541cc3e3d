#pragma once

#include <gmpxx.h>

#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

// Exact scalar ground types.  GMP keeps rationals canonical (coprime,
// positive denominator), which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ZeroDenominator();
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool rat_is_one(const Rat& x) { return x == 1; }

inline bool int_fits_ulong(const Int& n) {
  return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t());
}

// floor(log2 |x|) estimate used by the expansion bit budget: 0 for units.
inline unsigned long rat_size_bits(const Rat& x) {
  if (rat_is_zero(x)) return 0;
  unsigned long nb = mpz_sizeinbase(x.get_num().get_mpz_t(), 2) - 1;
  unsigned long db = mpz_sizeinbase(x.get_den().get_mpz_t(), 2) - 1;
  return nb + db;
}

// x^e for e >= 0.  Unit bases reduce to a parity check so that huge
// exponents (factored determinants at astronomical n) stay cheap.
inline Rat rat_pow(const Rat& x, const Int& e) {
  if (sgn(e) < 0) throw Error("rat_pow: negative exponent");
  if (e == 0) return Rat(1);
  if (rat_is_zero(x)) return Rat(0);
  if (x == 1) return Rat(1);
  if (x == -1) return mpz_odd_p(e.get_mpz_t()) ? Rat(-1) : Rat(1);
  if (!int_fits_ulong(e)) throw BitBudgetExceeded();
  unsigned long ue = mpz_get_ui(e.get_mpz_t());
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), x.get_num().get_mpz_t(), ue);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), x.get_den().get_mpz_t(), ue);
  // num and den were coprime, so their powers are too.
  return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace selfsim
