#pragma once

#include "aplab/bohr.hpp"
#include "aplab/cyclic_core.hpp"
#include "aplab/policy.hpp"

namespace aplab {

// L^p exponents are capped at 2 + log N before use; the pipelines never
// choose p beyond that and the cap keeps the power sums well conditioned.
double cap_exponent(double p, u64 n);

// Exact set of eps-almost-periods of f * mu_S intersected with T - T:
//   { y : ||f*mu_S - tau_y(f*mu_S)||_p <= eps ||f||_p }.
// Exhaustive over y; contains 0 and is symmetric by construction.
ZnSet almost_period_set(const GroupFunction& f, const ZnSet& s, const ZnSet& t, double p,
                        double eps);

// lambda_X^(l) with lambda_X = mu_X * mu_{-X}; a probability function.
// Exact integer path whenever |X|^(2l) stays inside the CRT range.
GroupFunction smoothing_operator(const ZnSet& x, u32 l);

// || f*mu_S - f*mu_S*lambda_X^(l) ||_p
double smoothing_defect(const GroupFunction& f, const ZnSet& s, const ZnSet& x, u32 l,
                        double p);

struct ClsFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClsAlmostPeriods {
  BohrSet bohr;
  double p_used;
  double theta;
  double bound;  // theta * alpha1^{1/p}
  int halvings;
};

// Bohr set of almost-periods of 1_{A1} * mu_{A2}: frequencies are
// Spec_{theta/4}(mu_{A2}), the radius starts at 2 and halves until every
// member passes ||(I - tau_x) 1_{A1}*mu_{A2}||_p <= theta alpha_1^{1/p},
// verified exhaustively.  Throws ClsFailure with the offending x if the
// halving budget runs out.
ClsAlmostPeriods cls_bohr_almost_periods(const ZnSet& a1, const ZnSet& a2, double p,
                                         double theta, const Policy& policy = Policy{});

}  // namespace aplab
