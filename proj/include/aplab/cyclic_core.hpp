#pragma once

#include <vector>

#include "aplab/common.hpp"
#include "aplab/group_function.hpp"
#include "aplab/ntt.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// f_hat(k) = (1/N) sum_x f(x) e(-kx/N); inversion is the plain sum
// f(x) = sum_k f_hat(k) e(+kx/N).
GroupFunction dft(const GroupFunction& f);
GroupFunction idft(const GroupFunction& fhat);

// f * g (x) = E_y f(y) g(x-y).  Frequency-domain product; exactness
// propagates (with denominator N * df * dg) when both inputs are exact and
// the combined denominator still fits, otherwise the flag is dropped.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

// l-fold self-convolution via one forward transform, a pointwise power and
// one inverse.
GroupFunction power_convolve(const GroupFunction& f, u32 l);

// r(w) = #{(x,y,z) in A x B x C : x+y+z = w} = N^2 (1_A*1_B*1_C)(w).
// Bit-exact via the integer NTT; for N <= 128 the result is re-derived by
// direct summation and a mismatch aborts with KernelBug.
std::vector<u64> representation_counts(const ZnSet& a, const ZnSet& b, const ZnSet& c);

struct SpectrumEntry {
  u32 frequency;
  cplx coefficient;
};

struct Spectrum {
  double eta;
  std::vector<SpectrumEntry> entries;
  bool zero_function = false;

  std::vector<u32> frequencies() const {
    std::vector<u32> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.frequency);
    return out;
  }
};

// Spec_eta(f) = { k : |f_hat(k)| >= eta ||f||_L1 }, inclusive within
// relative tolerance 1e-9 at the boundary.
Spectrum spectrum(const GroupFunction& f, double eta);

// f = 1_A - (|A|/|B|) 1_B for A inside B; mean zero with the coefficient
// held as an exact rational (every value is an integer over |B|).
GroupFunction balanced_function(const ZnSet& a, const ZnSet& b);

}  // namespace aplab
