#include "aplab/setgen.hpp"

namespace aplab {

ZnSet random_set(u64 n, double alpha, u64 seed) {
  require(alpha > 0.0 && alpha <= 1.0, "random_set: alpha must lie in (0,1]");
  ZnSet out(n);
  SplitMix64 gen(seed);
  for (u64 x = 0; x < n; ++x) {
    if (gen.next_double() < alpha) out.insert(static_cast<u32>(x));
  }
  return out;
}

ZnSet interval_set(u64 n, u64 m) {
  require(m >= 1 && m <= n, "interval_set: m must lie in [1, N]");
  ZnSet out(n);
  for (u64 x = 0; x < m; ++x) out.insert(static_cast<u32>(x));
  return out;
}

ZnSet bohr_sample(const BohrSet& b, double alpha, u64 seed) {
  require(alpha > 0.0 && alpha <= 1.0, "bohr_sample: alpha must lie in (0,1]");
  ZnSet out(b.modulus());
  SplitMix64 gen(seed);
  for (u32 x : b.members().elements()) {
    if (gen.next_double() < alpha) out.insert(x);
  }
  return out;
}

std::vector<u32> primes_upto(u64 n) {
  require(n >= 2, "primes_upto: n must be at least 2");
  std::vector<char> sieve(n + 1, 1);
  sieve[0] = sieve[1] = 0;
  for (u64 p = 2; p * p <= n; ++p) {
    if (!sieve[p]) continue;
    for (u64 q = p * p; q <= n; q += p) sieve[q] = 0;
  }
  std::vector<u32> out;
  for (u64 p = 2; p <= n; ++p) {
    if (sieve[p]) out.push_back(static_cast<u32>(p));
  }
  return out;
}

Rational density_of_primes(u64 n) {
  return Rational(static_cast<i64>(primes_upto(n).size()), static_cast<i64>(n));
}

ZnSet freiman_embed(const std::vector<u32>& a, u64 n) {
  require(n >= 1, "freiman_embed: n must be positive");
  ZnSet out(6 * n);
  for (u32 x : a) {
    require(x >= 1 && x <= n, "freiman_embed: element outside {1..n}");
    out.insert(x);
  }
  return out;
}

ZnSet prime_set_embedded(u64 n) { return freiman_embed(primes_upto(n), n); }

}  // namespace aplab
