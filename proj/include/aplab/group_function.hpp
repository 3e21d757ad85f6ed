#pragma once

#include <complex>
#include <vector>

#include "aplab/common.hpp"
#include "aplab/fft.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// Dense complex-valued function on Z/NZ.  When `exact` is set the values
// are integers divided by `denom` (value * denom is an integer up to 1e-6
// absolute), which lets indicator/measure arithmetic snap back to exact
// rationals after a float transform.
class GroupFunction {
 public:
  explicit GroupFunction(u64 modulus);
  GroupFunction(u64 modulus, std::vector<cplx> values);

  static GroupFunction indicator(const ZnSet& a);
  // mu_A = (N/|A|) 1_A, normalized to L1 mass 1.
  static GroupFunction measure(const ZnSet& a);
  static GroupFunction constant(u64 modulus, cplx value);

  u64 modulus() const { return n_; }
  const std::vector<cplx>& values() const { return values_; }
  cplx operator[](u64 x) const { return values_[x]; }
  cplx& at(u64 x) { return values_[x]; }

  bool exact() const { return exact_; }
  double denom() const { return denom_; }
  void set_exact(double denom);
  void clear_exact() { exact_ = false; denom_ = 1.0; }
  // Round values to the declared denominator; drops the flag (and returns
  // false) if some value is farther than 1e-6/denom from a representable
  // rational.
  bool snap_to_exact(double denom);

  // tau_x f (u) = f(u + x)
  GroupFunction translate(u32 x) const;
  // f(-u)
  GroupFunction reflect() const;
  GroupFunction conjugate() const;

  GroupFunction operator+(const GroupFunction& g) const;
  GroupFunction operator-(const GroupFunction& g) const;
  GroupFunction scaled(cplx s) const;

  double max_abs() const;

 private:
  u64 n_;
  std::vector<cplx> values_;
  bool exact_ = false;
  double denom_ = 1.0;
};

// L^p norm with the averaging normalization: (E_x |f|^p)^(1/p).
// p = infinity gives the sup norm; requires p >= 1.
double lp_norm(const GroupFunction& f, double p);

std::complex<double> inner_product(const GroupFunction& f, const GroupFunction& g);

}  // namespace aplab
