#include "aplab/ntt.hpp"

#include <algorithm>
#include <bit>

namespace aplab {
namespace {

// p1 = 29*2^57 + 1 (root 3), p2 = 27*2^56 + 1 (root 5); both support
// transform lengths far beyond anything reachable at desk scale.
constexpr u64 kPrime1 = 4179340454199820289ULL;
constexpr u64 kRoot1 = 3;
constexpr u64 kPrime2 = 1945555039024054273ULL;
constexpr u64 kRoot2 = 5;

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// In-place iterative radix-2 NTT, bit-reversal order first.
void ntt(std::vector<u64>& a, bool invert, u64 p, u64 root) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    u64 w = pow_mod(root, (p - 1) / len, p);
    if (invert) w = inv_mod(w, p);
    for (size_t i = 0; i < n; i += len) {
      u64 wn = 1;
      for (size_t j = 0; j < len / 2; ++j) {
        u64 u = a[i + j];
        u64 v = mul_mod(a[i + j + len / 2], wn, p);
        a[i + j] = u + v < p ? u + v : u + v - p;
        a[i + j + len / 2] = u >= v ? u - v : u + p - v;
        wn = mul_mod(wn, w, p);
      }
    }
  }
  if (invert) {
    u64 ninv = inv_mod(n % p, p);
    for (auto& x : a) x = mul_mod(x, ninv, p);
  }
}

std::vector<u64> linear_convolve_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                                     size_t out_len, u64 p, u64 root) {
  size_t m = std::bit_ceil(out_len);
  std::vector<u64> fa(m, 0), fb(m, 0);
  for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % p;
  for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % p;
  ntt(fa, false, p, root);
  ntt(fb, false, p, root);
  for (size_t i = 0; i < m; ++i) fa[i] = mul_mod(fa[i], fb[i], p);
  ntt(fa, true, p, root);
  fa.resize(out_len);
  return fa;
}

}  // namespace

std::vector<u64> cyclic_convolve_counts(const std::vector<u64>& a, const std::vector<u64>& b) {
  require(a.size() == b.size() && a.size() >= 2, "cyclic_convolve_counts: size mismatch");
  const size_t n = a.size();

  unsigned __int128 sum_a = 0, sum_b = 0;
  u64 max_a = 0, max_b = 0;
  for (u64 x : a) {
    sum_a += x;
    max_a = std::max(max_a, x);
  }
  for (u64 x : b) {
    sum_b += x;
    max_b = std::max(max_b, x);
  }
  unsigned __int128 bound =
      std::min(sum_a * static_cast<unsigned __int128>(max_b),
               sum_b * static_cast<unsigned __int128>(max_a));

  const size_t out_len = 2 * n - 1;
  std::vector<u64> folded(n, 0);
  if (bound < kPrime1) {
    std::vector<u64> lin = linear_convolve_mod(a, b, out_len, kPrime1, kRoot1);
    for (size_t w = 0; w < n; ++w) folded[w] = lin[w];
    for (size_t w = n; w < out_len; ++w) {
      folded[w - n] += lin[w];
      kernel_check(folded[w - n] >= lin[w], "cyclic_convolve_counts: fold overflow");
    }
  } else {
    kernel_check(bound < static_cast<unsigned __int128>(kPrime1) * kPrime2,
                 "cyclic_convolve_counts: coefficient bound exceeds CRT range");
    std::vector<u64> r1 = linear_convolve_mod(a, b, out_len, kPrime1, kRoot1);
    std::vector<u64> r2 = linear_convolve_mod(a, b, out_len, kPrime2, kRoot2);
    const u64 p1_inv_p2 = inv_mod(kPrime1 % kPrime2, kPrime2);
    for (size_t w = 0; w < out_len; ++w) {
      u64 d = r2[w] >= r1[w] % kPrime2 ? r2[w] - r1[w] % kPrime2
                                       : r2[w] + kPrime2 - r1[w] % kPrime2;
      unsigned __int128 value =
          static_cast<unsigned __int128>(mul_mod(d, p1_inv_p2, kPrime2)) * kPrime1 + r1[w];
      kernel_check(value <= UINT64_MAX, "cyclic_convolve_counts: count exceeds 64 bits");
      size_t dst = w < n ? w : w - n;
      u64 prev = folded[dst];
      folded[dst] = prev + static_cast<u64>(value);
      kernel_check(folded[dst] >= prev, "cyclic_convolve_counts: fold overflow");
    }
  }
  return folded;
}

std::vector<u64> correlation_counts(const ZnSet& a, const ZnSet& b) {
  require(a.modulus() == b.modulus(), "correlation_counts: modulus mismatch");
  const u64 n = a.modulus();
  std::vector<u64> ia(n, 0), ib(n, 0);
  for (u32 x : a.elements()) ia[x] = 1;
  // |A cap (x+B)| = sum_y 1_A(y) 1_B(y-x) = (1_A conv 1_{-B})(x)
  for (u32 x : b.elements()) ib[x == 0 ? 0 : n - x] = 1;
  return cyclic_convolve_counts(ia, ib);
}

ZnSet sumset_support(const ZnSet& a, const ZnSet& b) {
  require(a.modulus() == b.modulus(), "sumset_support: modulus mismatch");
  const u64 n = a.modulus();
  std::vector<u64> ia(n, 0), ib(n, 0);
  for (u32 x : a.elements()) ia[x] = 1;
  for (u32 x : b.elements()) ib[x] = 1;
  std::vector<u64> c = cyclic_convolve_counts(ia, ib);
  ZnSet out(n);
  for (u64 w = 0; w < n; ++w) {
    if (c[w] > 0) out.insert(static_cast<u32>(w));
  }
  return out;
}

ZnSet difference_set(const ZnSet& t) {
  return sumset_support(t, t.negate());
}

}  // namespace aplab
