#pragma once

#include <array>
#include <string>
#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/policy.hpp"
#include "aplab/transforms.hpp"

namespace aplab {

struct NoThickAp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Progression whose every element carries at least k representations as a
// sum over A x B x C; counts are exact integers re-derived at construction.
struct VerifiedAP {
  ArithmeticProgression ap;
  u64 k = 1;
  std::vector<u64> rep_counts;
  u64 min_rep = 0;
};

// Longest AP inside any subset, exhaustive over differences and the runs
// within each residue-class cycle.  Empty set gives length 0.
ArithmeticProgression longest_ap_in_set(const ZnSet& u);

// Ground truth for every pipeline conclusion: level set of the exact
// representation counts, then exhaustive AP search inside it.
VerifiedAP oracle_longest_ap(const ZnSet& a, const ZnSet& b, const ZnSet& c, u64 k);

// Recount and enforce r(w) >= k on every element (KernelBug on violation).
VerifiedAP verify_ap(const ArithmeticProgression& ap, const ZnSet& a, const ZnSet& b,
                     const ZnSet& c, u64 k);

// AP of length >= ceil(4/v) inside V, where V misses at most a v-fraction
// of B.  Scans sub-progressions of ap_in_bohr(B) whose differences are
// multiples of the base step, then falls back to the exhaustive search.
ArithmeticProgression thick_ap(const BohrSet& b, const ZnSet& v_set, double v,
                               const Policy& policy = Policy{});

struct StepRecord {
  int index = 1;
  std::vector<u32> bohr_gamma;
  double bohr_delta = 2.0;
  u64 bohr_card = 0;
  std::array<Rational, 3> alpha;
  std::array<u32, 3> translate = {0, 0, 0};
  double rho = 0;
  double omega_threshold = 0;  // omega b^2 N^2 in counts
  double v = 0;
  std::string outcome;
};

struct PipelineRun {
  std::string pipeline;
  u64 n = 0;
  std::array<int, 3> order = {0, 1, 2};  // density-descending permutation used
  u32 z = 0;
  std::vector<u32> final_gamma;
  double final_delta = 2.0;
  u64 final_bohr_card = 0;
  VerifiedAP ap;
  std::vector<StepRecord> trace;
  std::string branch;  // "constructive" or "oracle-only"
  std::string note;
  bool window_verified = false;  // counting bound checked on all of z + B
  int steps = 1;
  double guaranteed_length = 0;
  std::vector<ZnSet> final_sets;  // iteration sets at the last step, permuted order
};

// Almost-periodicity route: Bohr almost-periods of 1_{A1} * mu_{A2},
// translate z at the argmax of the triple convolution, exhaustive check of
// the half-product counting bound on z + B, progression from ap_in_bohr.
// K = ceil(alpha~ N^2 / 2).
PipelineRun cls_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                         const Policy& policy = Policy{});

// Density-increment route: iterate until a Bohr dilate sits inside the
// upper level set at threshold omega b^2 (omega = 0 means pure sumset
// support, K = 1).
PipelineRun increment_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                               const Policy& policy = Policy{});

// Thick-level-set route: the three-set Katz-Koester iteration ending in a
// (1-v)-dense level set; epsilon sets omega = N^{-c eps / log(2/alpha~)}.
PipelineRun levelset_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                              double epsilon, const Policy& policy = Policy{});

// Rebuild the iteration sets from the translate log; used to check that an
// IterationState trace reconstructs bit for bit.
std::vector<ZnSet> replay_iteration(const std::array<ZnSet, 3>& initial,
                                    const std::vector<StepRecord>& trace,
                                    const Policy& policy = Policy{});

std::string run_to_jsonl(const PipelineRun& run);

}  // namespace aplab
