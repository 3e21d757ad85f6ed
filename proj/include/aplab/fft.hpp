#pragma once

#include <complex>
#include <vector>

#include "aplab/common.hpp"

namespace aplab {

using cplx = std::complex<double>;

// Unnormalized DFT of arbitrary length: out[k] = sum_x in[x] e(sign * kx/N).
// Power-of-two lengths run the radix-2 transform directly; everything else
// goes through Bluestein's chirp reindexing, which only ever needs the
// radix-2 kernel internally.
std::vector<cplx> dft_unnormalized(const std::vector<cplx>& in, int sign);

}  // namespace aplab
