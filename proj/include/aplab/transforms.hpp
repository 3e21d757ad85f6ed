#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/cyclic_core.hpp"
#include "aplab/policy.hpp"

namespace aplab {

enum class FailKind {
  hypothesis_not_met,
  measured_failure,
  parameter_guard,
  loop_cap,
};

struct TransformFail {
  FailKind kind;
  std::string detail;
  double hypothesis_value = 0;
  double measured = 0;
};

struct IncrementWitness {
  BohrSet breve;
  u32 argmax = 0;          // translate achieving the sup
  Rational old_density;    // relative density before
  Rational new_density;    // measured ||1_A * mu_breve||_inf, exact
};

struct StructurePair {
  ZnSet l, s;
  Rational lambda, sigma;
  u64 k = 1;  // tracked pointwise constant
  int iterations = 0;
};

struct StructureTriple {
  ZnSet l, s1, s2;
  Rational lambda, sigma1, sigma2;
  u64 k = 1;
  int iterations = 0;
};

using L2Outcome = std::variant<IncrementWitness, TransformFail>;
using KK2Outcome = std::variant<IncrementWitness, StructurePair, TransformFail>;
using KK3Outcome = std::variant<IncrementWitness, StructureTriple, TransformFail>;

// Regular sub-Bohr set B' <= B with |1 - gamma(x)| <= 1/2 for every
// gamma in Spec_eps(mu_X) and x in B', verified exhaustively.  Lambda is a
// greedy +-1-word cover of the spectrum (word length at most 8) and the
// radius is min(delta, 1/32) before the regular dilate.
BohrSet spectrum_annihilate(const BohrSet& b, const ZnSet& x, double eps,
                            const Policy& policy = Policy{});

// L2 density increment: on hypothesis
//   sum_{gamma in Spec_eta(mu_X)} |f_A_hat|^2 >= nu alpha^2 m_G(B)
// annihilates Spec_eta(mu_X) inside bdot and measures ||1_A * mu_breve||_inf
// exactly, requiring it to reach (1 + c_impl nu) alpha.  Failures are
// diagnostic values, never silent.
L2Outcome l2_density_increment(const BohrSet& b, const BohrSet& bdot, const ZnSet& a,
                               const ZnSet& x, double eta, double nu,
                               const Policy& policy = Policy{});

// Katz-Koester transform for (A in B, A' in B'): either a verified density
// increment on A, or sets L in B, S in B'' with 1_L * 1_S <= K 1_A * 1_{A'}
// checked exactly after every iteration.
KK2Outcome katz_koester_2(const BohrSet& b, const BohrSet& bp, const BohrSet& bpp,
                          const ZnSet& a, const ZnSet& ap,
                          const Policy& policy = Policy{});

// Three-set variant: (L, S1, S2) with the triple pointwise bound; the two
// S-sets shrink alternately, each through its own argmax translate.
KK3Outcome katz_koester_3(const BohrSet& b, const BohrSet& bp, const BohrSet& bpp,
                          const ZnSet& a, const ZnSet& ap1, const ZnSet& ap2,
                          const Policy& policy = Policy{});

struct ScalingResult {
  u32 x = 0;
  ZnSet translated;     // (A - x) cap B'
  Rational new_density; // exact |A cap (x + B')| / |B'|
  Rational average;     // E_{x in B} 1_A * mu_{B'}(x), exact
  Rational defect;      // ||mu_B * mu_{B'} - mu_B||_L1, exact
  bool averaging_bound_met = false;  // new_density >= alpha - 2 C0 rho d
};

// x = argmax 1_A * mu_{B'}, smallest residue on ties.  The chain
// new_density >= average >= alpha - defect is checked in exact rationals.
ScalingResult scaling_translate(const BohrSet& b, const ZnSet& a, const BohrSet& bp,
                                const Policy& policy = Policy{});

std::string fail_kind_name(FailKind k);

// Structured log lines for the experiment harness, one JSON object each.
std::string to_json_line(const L2Outcome& out);
std::string to_json_line(const KK2Outcome& out);
std::string to_json_line(const KK3Outcome& out);
std::string to_json_line(const ScalingResult& res);

}  // namespace aplab
