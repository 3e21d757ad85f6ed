#pragma once

#include <memory>
#include <vector>

#include "aplab/common.hpp"
#include "aplab/policy.hpp"
#include "aplab/rational.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

struct NoRegularDilate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared per-(N, Gamma) data: chord[x] = max_{k in Gamma} 2|sin(pi k x / N)|,
// which is |1 - e(kx/N)| maximized over the frequency set.  Membership at any
// radius is a single comparison against chord[x], and dilate cardinalities
// come from one sorted copy, so regularity scans never recompute sines.
struct BohrProfile {
  u64 n = 0;
  std::vector<u32> gamma;         // sorted, deduplicated
  std::vector<double> chord;      // indexed by x; chord[x] == chord[N-x]
  std::vector<double> sorted_chord;

  u64 count_at(double radius, double guard) const;
};

struct ArithmeticProgression {
  u64 modulus = 0;
  u32 start = 0;
  u32 difference = 0;
  u64 length = 0;

  std::vector<u32> elements() const;
};

struct RegularityReport {
  double c0 = 0;
  std::vector<double> rhos;       // probe grid in (0, 1/(C0 d)]
  std::vector<double> ratio_up;   // |B_{1+rho}| / |B|
  std::vector<double> ratio_down; // |B_{1-rho}| / |B|
  bool pass = false;
};

class BohrSet {
 public:
  static BohrSet make(u64 n, std::vector<u32> gamma, double delta,
                      const Policy& policy = Policy{});

  // B(Gamma, rho * delta); rho * delta above 2 is clamped (flagged).
  BohrSet dilate(double rho) const;

  u64 modulus() const { return profile_->n; }
  const std::vector<u32>& frequencies() const { return profile_->gamma; }
  u32 dimension() const { return static_cast<u32>(profile_->gamma.size()); }
  double delta() const { return delta_; }
  bool radius_clamped() const { return clamped_; }
  u64 boundary_hits() const { return boundary_hits_; }

  const ZnSet& members() const { return members_; }
  u64 cardinality() const { return members_.cardinality(); }
  Rational density() const { return members_.density(); }

  double chord(u32 x) const { return profile_->chord[x]; }
  u64 count_at_radius(double radius) const {
    return profile_->count_at(radius, guard_);
  }
  const std::shared_ptr<const BohrProfile>& profile() const { return profile_; }

  // True when other has Gamma containing ours and radius at most ours
  // (the sub-Bohr relation, other <= this).
  bool is_super_of(const BohrSet& other) const;

 private:
  BohrSet(std::shared_ptr<const BohrProfile> profile, double delta, bool clamped,
          double guard);

  std::shared_ptr<const BohrProfile> profile_;
  double delta_;
  bool clamped_;
  double guard_;
  ZnSet members_;
  u64 boundary_hits_ = 0;
};

// B(Gamma union Lambda, delta_new); requires delta_new <= delta(B).
BohrSet join(const BohrSet& b, const std::vector<u32>& lambda, double delta_new,
             const Policy& policy = Policy{});

// Classical doubling/growth/size bounds, evaluated from exact member counts.
double doubling_bound(u32 d);                 // 7^{-d}
double growth_bound(u32 d, double rho);       // e^{-6 d log(2/rho)}
double size_bound(u32 d, double delta);       // e^{-6 d log(4/delta)}

bool check_doubling(const BohrSet& b);
bool check_growth(const BohrSet& b, double rho);
bool check_size(const BohrSet& b);

// Symmetric progression {-Lt, ..., 0, ..., Lt} inside B for the step t
// minimizing the chord over t in {1, ..., N-1}; requires delta < pi.
// If the primary step misses the Dirichlet guarantee, every step is grown
// exhaustively and the longest wins.
ArithmeticProgression ap_in_bohr(const BohrSet& b);

double ap_guarantee(const BohrSet& b);  // (1/2pi) delta N^{1/d}

RegularityReport check_regularity(const BohrSet& b, const Policy& policy = Policy{});

struct RegularDilate {
  double kappa;
  BohrSet bohr;
};

// First kappa on a 64-point geometric grid in [1/2, 1) whose dilate passes
// check_regularity; throws NoRegularDilate after a full scan.
RegularDilate find_regular_dilate(const BohrSet& b, const Policy& policy = Policy{});

// ||mu_{x+B} - mu_B||_L1 as an exact rational; requires x in B_rho.
Rational averaging_defect(const BohrSet& b, u32 x, double rho,
                          const Policy& policy = Policy{});
// ||mu_B * mu_X - mu_B||_L1 for lambda = mu_X supported in B_rho.
Rational averaging_defect(const BohrSet& b, const ZnSet& x_support, double rho,
                          const Policy& policy = Policy{});

}  // namespace aplab
