#pragma once

#include <string>

#include "aplab/common.hpp"
#include "aplab/rational.hpp"

namespace aplab {

// Every tunable constant lives here.  The float tolerances form the numeric
// policy; the rest pin the absolute constants that the underlying
// inequalities leave free.  Serialized as a flat key=value file so a sweep
// can vary them without recompiling.
struct Policy {
  // numeric policy
  double rel_tol = 1e-9;          // float-path relative tolerance
  double boundary_guard = 1e-12;  // Bohr membership tie band, counted inside

  // Bohr regularity
  double c0 = 16.0;  // regularity constant C0
  int regular_probe_count = 32;
  int regular_kappa_grid = 64;

  // density-increment toolbox; c_impl is kept as 1/c_impl_den so the
  // product-growth inequalities can be checked in exact rationals
  i64 c_impl_den = 16;
  double sigma_floor_const = 8.0;
  double lambda_min = 0.5;
  double kk_cap_mult = 4.0;
  i64 l2_nu_den = 32;  // nu = 1/l2_nu_den for L2 increment calls

  // almost-periodicity
  int cls_max_halvings = 20;
  int max_theta_retries = 3;

  // pipelines
  double omega = 0.0;    // counting threshold; 0 = pure support
  double epsilon = 0.5;  // exponent parameter for level-set runs

  double c_impl() const { return 1.0 / static_cast<double>(c_impl_den); }
  Rational c_impl_rational() const { return Rational(1, c_impl_den); }
  // 1 + c_impl
  Rational increment_factor() const { return Rational(c_impl_den + 1, c_impl_den); }
  // 1 + c_impl / 4
  Rational product_growth_factor() const { return Rational(4 * c_impl_den + 1, 4 * c_impl_den); }
  double l2_nu() const { return 1.0 / static_cast<double>(l2_nu_den); }

  std::string serialize() const;
  static Policy parse(const std::string& text);
  static Policy load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace aplab
