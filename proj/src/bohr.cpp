#include "aplab/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "aplab/ntt.hpp"

namespace aplab {

namespace {
constexpr double kPi = std::numbers::pi;
}

u64 BohrProfile::count_at(double radius, double guard) const {
  if (radius >= 2.0) return n;
  auto it = std::upper_bound(sorted_chord.begin(), sorted_chord.end(), radius + guard);
  return static_cast<u64>(it - sorted_chord.begin());
}

std::vector<u32> ArithmeticProgression::elements() const {
  std::vector<u32> out;
  out.reserve(length);
  u64 cur = start;
  for (u64 i = 0; i < length; ++i) {
    out.push_back(static_cast<u32>(cur));
    cur += difference;
    if (cur >= modulus) cur -= modulus;
  }
  return out;
}

BohrSet::BohrSet(std::shared_ptr<const BohrProfile> profile, double delta, bool clamped,
                 double guard)
    : profile_(std::move(profile)),
      delta_(delta),
      clamped_(clamped),
      guard_(guard),
      members_(profile_->n) {
  const u64 n = profile_->n;
  for (u64 x = 0; x < n; ++x) {
    double c = profile_->chord[x];
    if (c <= delta_ + guard_) {
      members_.insert(static_cast<u32>(x));
      if (std::abs(c - delta_) <= guard_) ++boundary_hits_;
    }
  }
}

BohrSet BohrSet::make(u64 n, std::vector<u32> gamma, double delta, const Policy& policy) {
  require(n >= 2, "BohrSet: modulus must be at least 2");
  require(!gamma.empty(), "BohrSet: empty frequency set (use {0} for the full group)");
  require(delta > 0.0, "BohrSet: radius must be positive");
  for (u32 k : gamma) require(k < n, "BohrSet: frequency out of range");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());

  auto profile = std::make_shared<BohrProfile>();
  profile->n = n;
  profile->gamma = std::move(gamma);
  // half table of 2 sin(pi j / N); folding j -> min(j, N-j) makes the chord
  // exactly symmetric, so member symmetry is bit-for-bit
  std::vector<double> half(n / 2 + 1);
  for (u64 j = 0; j <= n / 2; ++j) {
    half[j] = 2.0 * std::sin(kPi * static_cast<double>(j) / static_cast<double>(n));
  }
  profile->chord.assign(n, 0.0);
  for (u64 x = 0; x < n; ++x) {
    double m = 0.0;
    for (u32 k : profile->gamma) {
      u64 j = (static_cast<u64>(k) * x) % n;
      if (j > n / 2) j = n - j;
      m = std::max(m, half[j]);
    }
    profile->chord[x] = m;
  }
  profile->sorted_chord = profile->chord;
  std::sort(profile->sorted_chord.begin(), profile->sorted_chord.end());

  bool clamped = delta > 2.0;
  return BohrSet(std::move(profile), clamped ? 2.0 : delta, clamped, policy.boundary_guard);
}

BohrSet BohrSet::dilate(double rho) const {
  require(rho > 0.0, "dilate: rho must be positive");
  double nd = rho * delta_;
  bool clamped = nd > 2.0;
  return BohrSet(profile_, clamped ? 2.0 : nd, clamped, guard_);
}

bool BohrSet::is_super_of(const BohrSet& other) const {
  if (other.delta_ > delta_ + guard_) return false;
  return std::includes(other.profile_->gamma.begin(), other.profile_->gamma.end(),
                       profile_->gamma.begin(), profile_->gamma.end());
}

BohrSet join(const BohrSet& b, const std::vector<u32>& lambda, double delta_new,
             const Policy& policy) {
  require(delta_new <= b.delta(), "join: new radius must not exceed the old one");
  std::vector<u32> gamma = b.frequencies();
  gamma.insert(gamma.end(), lambda.begin(), lambda.end());
  return BohrSet::make(b.modulus(), std::move(gamma), delta_new, policy);
}

double doubling_bound(u32 d) { return std::pow(7.0, -static_cast<double>(d)); }

double growth_bound(u32 d, double rho) {
  return std::exp(-6.0 * static_cast<double>(d) * std::log(2.0 / rho));
}

double size_bound(u32 d, double delta) {
  return std::exp(-6.0 * static_cast<double>(d) * std::log(4.0 / delta));
}

namespace {
// integer counts against a float bound, with a hair of slack for the
// float-evaluated right-hand side
bool measure_at_least(u64 count, u64 n, double bound) {
  return static_cast<double>(count) / static_cast<double>(n) >= bound * (1.0 - 1e-12);
}
}  // namespace

bool check_doubling(const BohrSet& b) {
  u64 half = b.count_at_radius(0.5 * b.delta());
  double bound = doubling_bound(b.dimension()) * static_cast<double>(b.cardinality()) /
                 static_cast<double>(b.modulus());
  return measure_at_least(half, b.modulus(), bound);
}

bool check_growth(const BohrSet& b, double rho) {
  require(rho > 0.0 && rho <= 1.0, "check_growth: rho must lie in (0,1]");
  u64 scaled = b.count_at_radius(rho * b.delta());
  double bound = growth_bound(b.dimension(), rho) * static_cast<double>(b.cardinality()) /
                 static_cast<double>(b.modulus());
  return measure_at_least(scaled, b.modulus(), bound);
}

bool check_size(const BohrSet& b) {
  require(b.delta() <= 2.0, "check_size: radius must be at most 2");
  return measure_at_least(b.cardinality(), b.modulus(),
                          size_bound(b.dimension(), b.delta()));
}

double ap_guarantee(const BohrSet& b) {
  return b.delta() * std::pow(static_cast<double>(b.modulus()),
                              1.0 / static_cast<double>(b.dimension())) /
         (2.0 * kPi);
}

namespace {

// Grow the symmetric progression through 0 with step t.  When the whole
// cycle of t lies inside B (resonant frequency set), the progression wraps
// through the subgroup and can be continued to any length; the caller then
// reports max(orbit, guarantee) terms.  Otherwise the 2j+1 terms are
// automatically distinct.
struct GrownAp {
  u64 length = 1;
  bool full_cycle = false;
};

GrownAp grow_step(const BohrProfile& prof, double delta, double guard, u32 t) {
  const u64 n = prof.n;
  const u64 orbit = n / std::gcd(n, static_cast<u64>(t));
  u64 j = 0;
  u64 pos = 0;
  while (j + 1 < orbit) {
    pos += t;
    if (pos >= n) pos -= n;
    if (prof.chord[pos] > delta + guard) break;
    ++j;
  }
  if (j + 1 == orbit) return {orbit, true};
  return {std::min(2 * j + 1, orbit), false};
}

}  // namespace

ArithmeticProgression ap_in_bohr(const BohrSet& b) {
  require(b.delta() < kPi, "ap_in_bohr: requires delta < pi");
  const BohrProfile& prof = *b.profile();
  const u64 n = prof.n;
  const double target = ap_guarantee(b);
  const u64 needed = std::max<u64>(1, static_cast<u64>(std::ceil(target - 1e-9)));

  auto effective = [&](const GrownAp& g) {
    return g.full_cycle ? std::max(g.length, needed) : g.length;
  };

  u32 best_t = 1;
  double best_chord = prof.chord[1];
  for (u64 t = 2; t < n; ++t) {
    if (prof.chord[t] < best_chord) {
      best_chord = prof.chord[t];
      best_t = static_cast<u32>(t);
    }
  }
  GrownAp grown = grow_step(prof, b.delta(), 1e-12, best_t);

  if (effective(grown) < needed) {
    // hairline Dirichlet cases: the chord-minimizing step is not always the
    // length-maximizing one, so grow every step
    for (u64 t = 1; t < n; ++t) {
      GrownAp g = grow_step(prof, b.delta(), 1e-12, static_cast<u32>(t));
      if (effective(g) > effective(grown)) {
        grown = g;
        best_t = static_cast<u32>(t);
      }
    }
  }

  ArithmeticProgression ap;
  ap.modulus = n;
  ap.difference = best_t;
  ap.length = effective(grown);
  if (grown.full_cycle) {
    ap.start = 0;
  } else {
    u64 l = (grown.length - 1) / 2;
    u64 back = (l * static_cast<u64>(best_t)) % n;
    ap.start = static_cast<u32>(back == 0 ? 0 : n - back);
  }
  for (u32 e : ap.elements()) {
    kernel_check(b.members().contains(e), "ap_in_bohr: produced element outside the Bohr set");
  }
  return ap;
}

RegularityReport check_regularity(const BohrSet& b, const Policy& policy) {
  RegularityReport report;
  report.c0 = policy.c0;
  const double d = static_cast<double>(b.dimension());
  const double rho_max = 1.0 / (policy.c0 * d);
  const double rho_min = rho_max / 1024.0;
  const int count = policy.regular_probe_count;
  const u64 base = b.cardinality();
  report.pass = true;
  for (int i = 0; i < count; ++i) {
    double rho = rho_min * std::pow(rho_max / rho_min,
                                    static_cast<double>(i) / static_cast<double>(count - 1));
    u64 up = b.count_at_radius((1.0 + rho) * b.delta());
    u64 down = b.count_at_radius((1.0 - rho) * b.delta());
    double ru = static_cast<double>(up) / static_cast<double>(base);
    double rd = static_cast<double>(down) / static_cast<double>(base);
    report.rhos.push_back(rho);
    report.ratio_up.push_back(ru);
    report.ratio_down.push_back(rd);
    double slack = policy.c0 * rho * d;
    if (ru > 1.0 + slack || rd < 1.0 - slack) report.pass = false;
  }
  return report;
}

RegularDilate find_regular_dilate(const BohrSet& b, const Policy& policy) {
  const int grid = policy.regular_kappa_grid;
  for (int i = 0; i < grid; ++i) {
    double kappa = 0.5 * std::pow(0.995 / 0.5,
                                  static_cast<double>(i) / static_cast<double>(grid - 1));
    BohrSet candidate = b.dilate(kappa);
    if (check_regularity(candidate, policy).pass) {
      return RegularDilate{kappa, std::move(candidate)};
    }
  }
  throw NoRegularDilate("find_regular_dilate: no kappa in [1/2,1) passes with C0=" +
                        std::to_string(policy.c0));
}

Rational averaging_defect(const BohrSet& b, u32 x, double rho, const Policy& policy) {
  require(rho > 0.0 && rho <= 1.0 / (policy.c0 * b.dimension()) + 1e-15,
          "averaging_defect: rho out of range");
  require(b.chord(x % b.modulus()) <= rho * b.delta() + policy.boundary_guard,
          "averaging_defect: x outside B_rho");
  const ZnSet& m = b.members();
  u64 overlap = m.intersection_count(m.translate(x));
  u64 symdiff = 2 * (m.cardinality() - overlap);
  return Rational(static_cast<i64>(symdiff), static_cast<i64>(m.cardinality()));
}

Rational averaging_defect(const BohrSet& b, const ZnSet& x_support, double rho,
                          const Policy& policy) {
  require(!x_support.empty(), "averaging_defect: empty support");
  require(rho > 0.0 && rho <= 1.0 / (policy.c0 * b.dimension()) + 1e-15,
          "averaging_defect: rho out of range");
  for (u32 x : x_support.elements()) {
    require(b.chord(x) <= rho * b.delta() + policy.boundary_guard,
            "averaging_defect: support not contained in B_rho");
  }
  // mu_B * mu_X (y) = N cnt(y) / (|B||X|) with cnt(y) = #{(b,x): b+x=y}
  const u64 n = b.modulus();
  std::vector<u64> ib(n, 0), ix(n, 0);
  for (u32 e : b.members().elements()) ib[e] = 1;
  for (u32 e : x_support.elements()) ix[e] = 1;
  std::vector<u64> cnt = cyclic_convolve_counts(ib, ix);
  const u64 bx = x_support.cardinality();
  i64 total = 0;
  for (u64 y = 0; y < n; ++y) {
    i64 diff = static_cast<i64>(cnt[y]) -
               static_cast<i64>(b.members().contains(static_cast<u32>(y)) ? bx : 0);
    total += diff < 0 ? -diff : diff;
  }
  return Rational(total, static_cast<i64>(b.cardinality() * bx));
}

}  // namespace aplab
