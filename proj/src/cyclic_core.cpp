#include "aplab/cyclic_core.hpp"

#include <algorithm>
#include <cmath>

namespace aplab {

GroupFunction dft(const GroupFunction& f) {
  const u64 n = f.modulus();
  std::vector<cplx> out = dft_unnormalized(f.values(), -1);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return GroupFunction(n, std::move(out));
}

GroupFunction idft(const GroupFunction& fhat) {
  return GroupFunction(fhat.modulus(), dft_unnormalized(fhat.values(), +1));
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  require(f.modulus() == g.modulus(), "convolve: modulus mismatch");
  const u64 n = f.modulus();
  std::vector<cplx> fa = dft_unnormalized(f.values(), -1);
  std::vector<cplx> fb = dft_unnormalized(g.values(), -1);
  for (u64 k = 0; k < n; ++k) fa[k] *= fb[k];
  std::vector<cplx> vals = dft_unnormalized(fa, +1);
  // one 1/N for the inverse transform, one for the E_y averaging
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (auto& v : vals) v *= scale;
  GroupFunction out(n, std::move(vals));
  if (f.exact() && g.exact()) {
    out.snap_to_exact(static_cast<double>(n) * f.denom() * g.denom());
  }
  return out;
}

GroupFunction power_convolve(const GroupFunction& f, u32 l) {
  require(l >= 1, "power_convolve: l must be at least 1");
  const u64 n = f.modulus();
  if (l == 1) return f;
  std::vector<cplx> fa = dft_unnormalized(f.values(), -1);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : fa) {
    cplx base = v * scale;
    cplx acc(1, 0);
    for (u32 i = 0; i < l; ++i) acc *= base;
    v = acc;
  }
  std::vector<cplx> vals = dft_unnormalized(fa, +1);
  GroupFunction out(n, std::move(vals));
  if (f.exact()) {
    out.snap_to_exact(std::pow(static_cast<double>(n), l - 1) * std::pow(f.denom(), l));
  }
  return out;
}

namespace {

std::vector<u64> rep_counts_direct(const ZnSet& a, const ZnSet& b, const ZnSet& c) {
  const u64 n = a.modulus();
  std::vector<u64> ab(n, 0), out(n, 0);
  for (u32 x : a.elements()) {
    for (u32 y : b.elements()) {
      u64 s = static_cast<u64>(x) + y;
      if (s >= n) s -= n;
      ++ab[s];
    }
  }
  for (u64 s = 0; s < n; ++s) {
    if (ab[s] == 0) continue;
    for (u32 z : c.elements()) {
      u64 w = s + z;
      if (w >= n) w -= n;
      out[w] += ab[s];
    }
  }
  return out;
}

}  // namespace

std::vector<u64> representation_counts(const ZnSet& a, const ZnSet& b, const ZnSet& c) {
  require(a.modulus() == b.modulus() && b.modulus() == c.modulus(),
          "representation_counts: modulus mismatch");
  const u64 n = a.modulus();
  std::vector<u64> ia(n, 0), ib(n, 0), ic(n, 0);
  for (u32 x : a.elements()) ia[x] = 1;
  for (u32 x : b.elements()) ib[x] = 1;
  for (u32 x : c.elements()) ic[x] = 1;
  std::vector<u64> r = cyclic_convolve_counts(cyclic_convolve_counts(ia, ib), ic);
  if (n <= 128) {
    kernel_check(r == rep_counts_direct(a, b, c),
                 "representation_counts: exact kernel disagrees with direct summation");
  }
  return r;
}

Spectrum spectrum(const GroupFunction& f, double eta) {
  require(eta > 0.0 && eta <= 1.0, "spectrum: eta must lie in (0,1]");
  Spectrum spec;
  spec.eta = eta;
  const double l1 = lp_norm(f, 1.0);
  if (l1 == 0.0) {
    spec.zero_function = true;
    return spec;
  }
  GroupFunction fhat = dft(f);
  const double threshold = eta * l1 * (1.0 - 1e-9);
  for (u64 k = 0; k < f.modulus(); ++k) {
    if (std::abs(fhat[k]) >= threshold) {
      spec.entries.push_back({static_cast<u32>(k), fhat[k]});
    }
  }
  return spec;
}

GroupFunction balanced_function(const ZnSet& a, const ZnSet& b) {
  require(a.modulus() == b.modulus(), "balanced_function: modulus mismatch");
  require(a.is_subset_of(b), "balanced_function: A must be contained in B");
  require(!b.empty(), "balanced_function: B must be nonempty");
  const u64 n = a.modulus();
  const double den = static_cast<double>(b.cardinality());
  GroupFunction f(n);
  // numerator of f at x is |B| 1_A(x) - |A| 1_B(x), an integer
  for (u32 x : b.elements()) f.at(x) = cplx(-static_cast<double>(a.cardinality()) / den, 0);
  for (u32 x : a.elements()) f.at(x) = cplx((den - static_cast<double>(a.cardinality())) / den, 0);
  f.set_exact(den);
  return f;
}

}  // namespace aplab
