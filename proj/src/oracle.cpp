#include "selfsim/oracle.hpp"

namespace selfsim::oracle {

DigitCounts digit_counts_brute(const Int& n, int base) {
  if (base < 2) throw Error("digit_counts_brute: base must be >= 2");
  if (sgn(n) < 0) throw Error("digit_counts_brute: negative n");
  if (n > 1000000) throw RangeTooLarge("digit_counts_brute: n > 10^6");
  DigitCounts dc{base, n,
                 std::vector<Int>(static_cast<std::size_t>(base), Int(0))};
  unsigned long limit = mpz_get_ui(n.get_mpz_t());
  std::vector<int> cur;  // odometer over minimal digit strings
  for (unsigned long k = 0; k < limit; ++k) {
    if (k == 0) {
      dc.counts[0] += 1;  // 0 is written as the single digit "0"
    } else {
      for (int d : cur) dc.counts[static_cast<std::size_t>(d)] += 1;
    }
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
  return dc;
}

}  // namespace selfsim::oracle
