#include "aplab/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace aplab {
namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void fft_pow2(std::vector<cplx>& a, int sign) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * kTau / static_cast<double>(len);
    cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Bluestein: kx = (k^2 + x^2 - (k-x)^2) / 2, so the DFT becomes a linear
// convolution against the chirp e(sign * j^2 / 2N), evaluated at a
// power-of-two length.  Chirp exponents are reduced mod 2N in exact integer
// arithmetic before the sine/cosine call.
std::vector<cplx> bluestein(const std::vector<cplx>& in, int sign) {
  const u64 n = in.size();
  const u64 two_n = 2 * n;
  std::vector<cplx> chirp(n);
  for (u64 j = 0; j < n; ++j) {
    u64 q = (j * j) % two_n;  // j < N <= 2^26 here, no overflow risk at desk scale
    double ang = sign * kTau * static_cast<double>(q) / static_cast<double>(two_n);
    chirp[j] = cplx(std::cos(ang), std::sin(ang));
  }
  const size_t m = std::bit_ceil(static_cast<size_t>(2 * n - 1));
  std::vector<cplx> fa(m, cplx(0, 0)), fb(m, cplx(0, 0));
  for (u64 j = 0; j < n; ++j) fa[j] = in[j] * chirp[j];
  for (u64 j = 0; j < n; ++j) {
    fb[j] = std::conj(chirp[j]);
    if (j > 0) fb[m - j] = std::conj(chirp[j]);
  }
  fft_pow2(fa, -1);
  fft_pow2(fb, -1);
  for (size_t i = 0; i < m; ++i) fa[i] *= fb[i];
  fft_pow2(fa, +1);
  const double scale = 1.0 / static_cast<double>(m);
  std::vector<cplx> out(n);
  for (u64 k = 0; k < n; ++k) out[k] = fa[k] * scale * chirp[k];
  return out;
}

}  // namespace

std::vector<cplx> dft_unnormalized(const std::vector<cplx>& in, int sign) {
  require(sign == 1 || sign == -1, "dft_unnormalized: sign must be +-1");
  require(!in.empty(), "dft_unnormalized: empty input");
  if (std::has_single_bit(in.size())) {
    std::vector<cplx> a = in;
    fft_pow2(a, sign);
    return a;
  }
  return bluestein(in, sign);
}

}  // namespace aplab
