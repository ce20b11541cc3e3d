#pragma once

#include <vector>

#include "selfsim/rational.hpp"

namespace selfsim {

// Occurrence counts e[j] of each base-b digit j over the representations of
// 0..n-1.  k = 0 is counted as the single digit "0" so that e[0] is
// well-defined; the choice never affects determinants since d(0) = 1.
struct DigitCounts {
  int base;
  Int n;
  std::vector<Int> counts;
};

// Closed-form per-position counting, O(b log n) arithmetic operations.
DigitCounts digit_counts(const Int& n, int base);

}  // namespace selfsim
