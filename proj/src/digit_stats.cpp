#include "selfsim/digit_stats.hpp"

#include <cstdint>

namespace selfsim {

namespace {

// Counts over zero-padded representations: among k in [0, n), the number
// whose padded digit at the position with place value B equals j is
//   floor(n/(B*b))*B  +  clamp(n mod (B*b) - j*B, 0, B).
// Minimal representations differ from padded ones only in leading zeros:
// a digit j >= 1 at place value B forces k >= B, so padded counts are
// already exact for j >= 1.  For j = 0 at position i >= 1 the k < b^i all
// contribute a padding zero that the minimal form does not have, so
// min(n, b^i) is subtracted.  Position 0 keeps its zeros (k = 0 counts as
// the single digit "0").

using U128 = unsigned __int128;

Int int_from_u128(U128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  Int lo(static_cast<unsigned long>(v & ~0ull));
  return (hi << 64) + lo;
}

void counts_u64(std::uint64_t n, int base, std::vector<Int>& e) {
  U128 b = static_cast<U128>(base);
  // position 0 always contributes (k = 0 counts as the digit "0")
  for (U128 place = 1; place == 1 || place < n; place *= b) {
    U128 full_blocks = n / (place * b);
    U128 rem = n % (place * b);
    for (int j = 0; j < base; ++j) {
      U128 cnt = full_blocks * place;
      U128 lo = static_cast<U128>(j) * place;
      if (rem > lo) cnt += (rem - lo < place) ? (rem - lo) : place;
      if (j == 0 && place > 1) cnt -= (n < place) ? n : static_cast<std::uint64_t>(place);
      e[static_cast<std::size_t>(j)] += int_from_u128(cnt);
    }
  }
}

void counts_mpz(const Int& n, int base, std::vector<Int>& e) {
  Int b(base);
  for (Int place(1); place == 1 || place < n; place *= b) {
    Int block = place * b;
    Int full_blocks = n / block;
    Int rem = n % block;
    for (int j = 0; j < base; ++j) {
      Int cnt = full_blocks * place;
      Int lo = Int(j) * place;
      if (rem > lo) {
        Int part = rem - lo;
        cnt += (part < place) ? part : place;
      }
      if (j == 0 && place > 1) cnt -= (n < place) ? n : place;
      e[static_cast<std::size_t>(j)] += cnt;
    }
  }
}

}  // namespace

DigitCounts digit_counts(const Int& n, int base) {
  if (base < 2) throw Error("digit_counts: base must be >= 2");
  if (sgn(n) < 0) throw Error("digit_counts: negative n");
  DigitCounts dc{base, n, std::vector<Int>(static_cast<std::size_t>(base), Int(0))};
  if (n == 0) return dc;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    counts_u64(mpz_get_ui(n.get_mpz_t()), base, dc.counts);
  } else {
    counts_mpz(n, base, dc.counts);
  }
  return dc;
}

}  // namespace selfsim
