#pragma once

#include <vector>

#include "aplab/common.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// Exact nonnegative-integer cyclic convolution on Z/NZ:
//   out[w] = sum_{i+j = w mod N} a[i]*b[j].
// Computed by a number-theoretic transform at power-of-two length >= 2N-1
// (linear convolution), with the cyclic wraparound folded back by index.
// Uses one 64-bit NTT prime while the coefficient bound fits below it and
// a two-prime CRT reconstruction otherwise; throws KernelBug if even the
// CRT range would overflow.  No floating point anywhere on this path.
std::vector<u64> cyclic_convolve_counts(const std::vector<u64>& a, const std::vector<u64>& b);

// corr[x] = |A \cap (x + B)| for every x, exactly.
std::vector<u64> correlation_counts(const ZnSet& a, const ZnSet& b);

// supp(1_A * 1_B) = A + B as a set.
ZnSet sumset_support(const ZnSet& a, const ZnSet& b);

// T - T as a set.
ZnSet difference_set(const ZnSet& t);

}  // namespace aplab
