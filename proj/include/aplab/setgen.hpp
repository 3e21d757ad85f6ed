#pragma once

#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/prng.hpp"
#include "aplab/rational.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// Each residue included independently with probability alpha; SplitMix64
// stream keyed by seed, one draw per residue, so identical (N, alpha, seed)
// give identical bitsets everywhere.
ZnSet random_set(u64 n, double alpha, u64 seed);

// {0, ..., m-1}
ZnSet interval_set(u64 n, u64 m);

// Seeded alpha-dense subset of the members of B.
ZnSet bohr_sample(const BohrSet& b, double alpha, u64 seed);

std::vector<u32> primes_upto(u64 n);

// pi(n) / n, exact.
Rational density_of_primes(u64 n);

// The projection Z -> Z/6nZ restricted to A in {1..n}; three-fold sums land
// in [3, 3n], an interval shorter than 6n, so equality of triple sums is
// preserved in both directions (Freiman 3-isomorphism).
ZnSet freiman_embed(const std::vector<u32>& a, u64 n);

// freiman_embed applied to the primes up to n.
ZnSet prime_set_embedded(u64 n);

}  // namespace aplab
