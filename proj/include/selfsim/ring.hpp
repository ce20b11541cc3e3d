#pragma once

#include <string>
#include <variant>

#include "selfsim/prime_field.hpp"
#include "selfsim/polynomial.hpp"
#include "selfsim/ratfun.hpp"
#include "selfsim/rational.hpp"

namespace selfsim {

enum class RingTag { Q, GF, QT };

// Boundary representation of a scalar: matrices are homogeneous in tag (and
// modulus), which the typed containers enforce by construction.
using RingValue = std::variant<Rat, Fp, RatFun>;

inline RingTag tag_of(const RingValue& v) {
  if (std::holds_alternative<Rat>(v)) return RingTag::Q;
  if (std::holds_alternative<Fp>(v)) return RingTag::GF;
  return RingTag::QT;
}

// --- generic scalar helpers, overloaded per ring -------------------------

inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat ring_one(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& x) { return rat_is_zero(x); }
inline bool ring_is_one(const Rat& x) { return rat_is_one(x); }
inline Rat ring_inv(const Rat& x) {
  if (rat_is_zero(x)) throw Error("inverse of zero");
  return Rat(1) / x;
}
inline Rat ring_pow(const Rat& x, const Int& e) { return rat_pow(x, e); }
inline unsigned long ring_size_bits(const Rat& x) { return rat_size_bits(x); }
inline std::string ring_str(const Rat& x) { return rat_str(x); }
inline bool ring_compatible(const Rat&, const Rat&) { return true; }

inline Fp ring_zero(const Fp& like) { return Fp(like.modulus(), 0ll); }
inline Fp ring_one(const Fp& like) { return Fp(like.modulus(), 1ll); }
inline bool ring_is_zero(const Fp& x) { return x.is_zero(); }
inline bool ring_is_one(const Fp& x) { return x.value() == 1; }
inline Fp ring_inv(const Fp& x) { return x.inverse(); }
inline Fp ring_pow(const Fp& x, const Int& e) { return x.pow(e); }
inline unsigned long ring_size_bits(const Fp&) { return 0; }  // never grows
inline std::string ring_str(const Fp& x) { return x.str(); }
inline bool ring_compatible(const Fp& a, const Fp& b) {
  return a.modulus() == b.modulus();
}

inline RatFun ring_zero(const RatFun&) { return RatFun(); }
inline RatFun ring_one(const RatFun&) { return RatFun(Rat(1)); }
inline bool ring_is_zero(const RatFun& x) { return x.is_zero(); }
inline bool ring_is_one(const RatFun& x) { return x == RatFun(Rat(1)); }
inline RatFun ring_inv(const RatFun& x) { return x.inverse(); }
inline unsigned long ring_size_bits(const RatFun& x) {
  unsigned long bits = 0;
  for (const Rat& c : x.num().coeffs()) bits += rat_size_bits(c) + 1;
  for (const Rat& c : x.den().coeffs()) bits += rat_size_bits(c) + 1;
  if (x.is_constant()) {
    Rat v = x.constant_value();
    return rat_size_bits(v);
  }
  return bits;
}
inline RatFun ring_pow(const RatFun& x, const Int& e) {
  if (sgn(e) < 0) throw Error("ring_pow: negative exponent");
  if (e == 0) return RatFun(Rat(1));
  if (x.is_constant()) return RatFun(rat_pow(x.constant_value(), e));
  if (!int_fits_ulong(e)) throw BitBudgetExceeded();
  unsigned long ue = mpz_get_ui(e.get_mpz_t());
  RatFun acc(Rat(1));
  RatFun base = x;
  while (ue) {
    if (ue & 1) acc = acc * base;
    base = base * base;
    ue >>= 1;
  }
  return acc;
}
inline std::string ring_str(const RatFun& x) { return x.str(); }
inline bool ring_compatible(const RatFun&, const RatFun&) { return true; }

inline std::string ring_value_str(const RingValue& v) {
  return std::visit([](const auto& x) { return ring_str(x); }, v);
}

}  // namespace selfsim
