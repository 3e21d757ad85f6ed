#include "aplab/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "aplab/ntt.hpp"

#include "json.hpp"

namespace aplab {

std::string fail_kind_name(FailKind k) {
  switch (k) {
    case FailKind::hypothesis_not_met: return "hypothesis-not-met";
    case FailKind::measured_failure: return "measured-failure";
    case FailKind::parameter_guard: return "parameter-guard";
    case FailKind::loop_cap: return "loop-cap";
  }
  return "unknown";
}

namespace {

constexpr int kMaxWordLength = 8;

double single_chord(u64 freq, u64 x, u64 n) {
  u64 j = (freq * x) % n;
  if (j > n / 2) j = n - j;
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
}

// depth[r] = least word length over Lambda with +-1 coefficients reaching r,
// capped at kMaxWordLength; plain layered BFS from 0.
std::vector<int> word_depths(u64 n, const std::vector<u32>& lambda) {
  std::vector<int> depth(n, kMaxWordLength + 1);
  depth[0] = 0;
  std::vector<u32> frontier = {0};
  for (int level = 1; level <= kMaxWordLength && !frontier.empty(); ++level) {
    std::vector<u32> next;
    for (u32 r : frontier) {
      for (u32 lam : lambda) {
        u64 fwd = (r + lam) % n;
        u64 bwd = (r + n - lam % n) % n;
        if (depth[fwd] > level) {
          depth[fwd] = level;
          next.push_back(static_cast<u32>(fwd));
        }
        if (depth[bwd] > level) {
          depth[bwd] = level;
          next.push_back(static_cast<u32>(bwd));
        }
      }
    }
    frontier = std::move(next);
  }
  return depth;
}

// Largest value over members not yet used, smallest x on ties; returns
// false when every member has been used already.
bool argmax_over_members(const std::vector<u64>& values, const ZnSet& members,
                         const ZnSet& used, u64& best_out, u32& arg_out) {
  u64 best = 0;
  u32 arg = 0;
  bool found = false;
  for (u32 x : members.elements()) {
    if (used.contains(x)) continue;
    if (!found || values[x] > best) {
      best = values[x];
      arg = x;
      found = true;
    }
  }
  best_out = best;
  arg_out = arg;
  return found;
}

std::vector<u64> indicator_vector(const ZnSet& s) {
  std::vector<u64> v(s.modulus(), 0);
  for (u32 x : s.elements()) v[x] = 1;
  return v;
}

void check_pointwise_domination(const std::vector<u64>& lhs, u64 k,
                                const std::vector<u64>& rhs, const char* where) {
  for (size_t w = 0; w < lhs.size(); ++w) {
    kernel_check(lhs[w] <= k * rhs[w], std::string(where) + ": pointwise domination violated");
  }
}

}  // namespace

BohrSet spectrum_annihilate(const BohrSet& b, const ZnSet& x, double eps,
                            const Policy& policy) {
  require(!x.empty(), "spectrum_annihilate: X must be nonempty");
  require(x.is_subset_of(b.members()), "spectrum_annihilate: X must lie inside B");
  require(eps > 0.0 && eps <= 1.0, "spectrum_annihilate: eps must lie in (0,1]");
  const u64 n = b.modulus();

  Spectrum spec = spectrum(GroupFunction::measure(x), eps);
  std::vector<SpectrumEntry> order = spec.entries;
  std::sort(order.begin(), order.end(), [](const SpectrumEntry& a, const SpectrumEntry& c) {
    double ma = std::abs(a.coefficient), mc = std::abs(c.coefficient);
    if (ma != mc) return ma > mc;
    return a.frequency < c.frequency;
  });

  std::vector<u32> lambda;
  std::vector<int> depth = word_depths(n, lambda);
  for (const auto& e : order) {
    if (depth[e.frequency] <= kMaxWordLength) continue;
    lambda.push_back(e.frequency);
    depth = word_depths(n, lambda);
  }

  double delta_ann =
      lambda.empty() ? b.delta() : std::min(b.delta(), 0.25 / kMaxWordLength);
  BohrSet joined = join(b, lambda, delta_ann, policy);
  BohrSet annihilated = find_regular_dilate(joined, policy).bohr;

  for (const auto& e : spec.entries) {
    for (u32 member : annihilated.members().elements()) {
      kernel_check(single_chord(e.frequency, member, n) <= 0.5 + 1e-12,
                   "spectrum_annihilate: annihilation check failed");
    }
  }
  return annihilated;
}

L2Outcome l2_density_increment(const BohrSet& b, const BohrSet& bdot, const ZnSet& a,
                               const ZnSet& x, double eta, double nu,
                               const Policy& policy) {
  require(!a.empty(), "l2_density_increment: A must be nonempty");
  require(a.is_subset_of(b.members()), "l2_density_increment: A must lie inside B");
  require(!x.empty(), "l2_density_increment: X must be nonempty");
  require(x.is_subset_of(bdot.members()), "l2_density_increment: X must lie inside Bdot");
  require(eta > 0.0 && eta <= 1.0, "l2_density_increment: eta must lie in (0,1]");
  require(nu > 0.0 && nu <= 1.0, "l2_density_increment: nu must lie in (0,1]");
  require(b.is_super_of(bdot), "l2_density_increment: Bdot must be a sub-Bohr set of B");

  const double c = policy.c_impl();
  const double rho = bdot.delta() / b.delta();
  const double alpha = a.density().to_double() * static_cast<double>(b.modulus()) /
                       static_cast<double>(b.cardinality());
  const double d = static_cast<double>(b.dimension());
  if (rho > c * nu * alpha / d) {
    return TransformFail{FailKind::parameter_guard,
                         "rho exceeds c nu alpha / d", rho, c * nu * alpha / d};
  }

  GroupFunction fa_hat = dft(balanced_function(a, b.members()));
  Spectrum spec = spectrum(GroupFunction::measure(x), eta);
  double hyp = 0;
  for (const auto& e : spec.entries) hyp += std::norm(fa_hat[e.frequency]);
  const double threshold = nu * alpha * alpha * static_cast<double>(b.cardinality()) /
                           static_cast<double>(b.modulus());
  if (hyp < threshold) {
    return TransformFail{FailKind::hypothesis_not_met,
                         "spectral mass below nu alpha^2 m_G(B)", hyp, threshold};
  }

  std::optional<BohrSet> breve;
  try {
    breve = spectrum_annihilate(bdot, x, eta, policy);
  } catch (const NoRegularDilate& e) {
    return TransformFail{FailKind::measured_failure, e.what(), hyp, 0};
  }

  std::vector<u64> corr = correlation_counts(a, breve->members());
  u64 best = 0;
  u32 arg = 0;
  for (u64 w = 0; w < b.modulus(); ++w) {
    if (corr[w] > best) {
      best = corr[w];
      arg = static_cast<u32>(w);
    }
  }
  Rational old_density(static_cast<i64>(a.cardinality()), static_cast<i64>(b.cardinality()));
  Rational new_density(static_cast<i64>(best), static_cast<i64>(breve->cardinality()));
  // measured sup must clear (1 + c nu) alpha
  long double lhs = static_cast<long double>(best) * b.cardinality();
  long double rhs = (1.0L + static_cast<long double>(c) * nu) * a.cardinality() *
                    breve->cardinality();
  if (lhs < rhs) {
    return TransformFail{FailKind::measured_failure,
                         "measured sup below (1 + c nu) alpha", hyp,
                         new_density.to_double()};
  }
  return IncrementWitness{std::move(*breve), arg, old_density, new_density};
}

namespace {

struct KkGuards {
  double alpha, alpha_p;
  u64 floor_count;
  int cap;
};

std::optional<TransformFail> kk_check_guards(const BohrSet& b, const BohrSet& bp,
                                             const BohrSet& bpp, const ZnSet& a,
                                             double alpha_p, const Policy& policy,
                                             double gamma_for_rho_p, KkGuards& out) {
  const double c = policy.c_impl();
  const double d = static_cast<double>(b.dimension());
  const double alpha = static_cast<double>(a.cardinality()) /
                       static_cast<double>(b.cardinality());
  const double rho = bp.delta() / b.delta();
  const double rho_p = bpp.delta() / bp.delta();
  if (rho > c * alpha / d * (1 + 1e-12)) {
    return TransformFail{FailKind::parameter_guard, "rho exceeds c alpha / d", rho,
                         c * alpha / d};
  }
  if (rho_p > c * gamma_for_rho_p / d * (1 + 1e-12)) {
    return TransformFail{FailKind::parameter_guard, "rho' exceeds its guard", rho_p,
                         c * gamma_for_rho_p / d};
  }
  out.alpha = alpha;
  out.alpha_p = alpha_p;
  return std::nullopt;
}

}  // namespace

KK2Outcome katz_koester_2(const BohrSet& b, const BohrSet& bp, const BohrSet& bpp,
                          const ZnSet& a, const ZnSet& ap, const Policy& policy) {
  require(!a.empty() && !ap.empty(), "katz_koester_2: empty input set");
  require(a.is_subset_of(b.members()), "katz_koester_2: A must lie inside B");
  require(ap.is_subset_of(bp.members()), "katz_koester_2: A' must lie inside B'");
  require(b.is_super_of(bp) && bp.is_super_of(bpp), "katz_koester_2: Bohr chain broken");

  const u64 n = b.modulus();
  const double alpha_p = static_cast<double>(ap.cardinality()) /
                         static_cast<double>(bp.cardinality());
  KkGuards g;
  if (auto fail = kk_check_guards(b, bp, bpp, a, alpha_p, policy, alpha_p, g)) return *fail;

  const double sigma_floor =
      std::exp(-policy.sigma_floor_const * std::log(2.0 / g.alpha_p) / g.alpha);
  const u64 floor_count = std::max<u64>(
      1, static_cast<u64>(std::ceil(sigma_floor * static_cast<double>(bpp.cardinality()))));
  const int cap =
      static_cast<int>(std::ceil(policy.kk_cap_mult * std::log(2.0 / sigma_floor))) + 1;

  const std::vector<u64> base = cyclic_convolve_counts(indicator_vector(a), indicator_vector(ap));

  ZnSet l = a;
  ZnSet s = ap.intersect(bpp.members());
  ZnSet used(n);  // each translate enters L at most once
  u64 k = 1;
  int iters = 0;
  check_pointwise_domination(cyclic_convolve_counts(indicator_vector(l), indicator_vector(s)),
                             k, base, "katz_koester_2");

  auto attempt_increment = [&](const ZnSet& witness) -> KK2Outcome {
    if (witness.empty()) {
      return TransformFail{FailKind::measured_failure, "S exhausted before increment", 0, 0};
    }
    L2Outcome l2 = l2_density_increment(b, bpp, a, witness, 0.5, policy.l2_nu(), policy);
    if (auto* w = std::get_if<IncrementWitness>(&l2)) {
      // the transform contract promises the full (1 + c_impl) factor
      Rational needed = policy.increment_factor() * w->old_density;
      if (w->new_density >= needed) return std::move(*w);
      return TransformFail{FailKind::measured_failure,
                           "increment below (1 + c_impl) alpha", 0,
                           w->new_density.to_double()};
    }
    TransformFail f = std::get<TransformFail>(l2);
    f.detail = "floor hit; l2: " + f.detail;
    return f;
  };

  while (static_cast<double>(l.cardinality()) <
         policy.lambda_min * static_cast<double>(b.cardinality())) {
    if (iters >= cap) {
      return TransformFail{FailKind::loop_cap, "iteration cap exceeded",
                           static_cast<double>(iters), static_cast<double>(cap)};
    }
    if (s.empty()) return attempt_increment(s);
    std::vector<u64> corr = correlation_counts(a, s);
    u64 best = 0;
    u32 xstar = 0;
    if (!argmax_over_members(corr, bpp.members(), used, best, xstar) ||
        best < floor_count) {
      return attempt_increment(s);
    }
    used.insert(xstar);
    l = l.unite(ap.translate(xstar).intersect(b.members()));
    s = s.intersect(a.translate(static_cast<u32>((n - xstar) % n)));
    ++k;
    ++iters;
    check_pointwise_domination(cyclic_convolve_counts(indicator_vector(l), indicator_vector(s)),
                               k, base, "katz_koester_2");
  }

  Rational lambda_final(static_cast<i64>(l.cardinality()), static_cast<i64>(b.cardinality()));
  Rational sigma_final(static_cast<i64>(s.cardinality()), static_cast<i64>(bpp.cardinality()));
  return StructurePair{std::move(l), std::move(s), lambda_final, sigma_final, k, iters};
}

KK3Outcome katz_koester_3(const BohrSet& b, const BohrSet& bp, const BohrSet& bpp,
                          const ZnSet& a, const ZnSet& ap1, const ZnSet& ap2,
                          const Policy& policy) {
  require(!a.empty() && !ap1.empty() && !ap2.empty(), "katz_koester_3: empty input set");
  require(a.is_subset_of(b.members()), "katz_koester_3: A must lie inside B");
  require(ap1.is_subset_of(bp.members()) && ap2.is_subset_of(bp.members()),
          "katz_koester_3: A'_i must lie inside B'");
  require(b.is_super_of(bp) && bp.is_super_of(bpp), "katz_koester_3: Bohr chain broken");

  const u64 n = b.modulus();
  const double a1d = static_cast<double>(ap1.cardinality()) /
                     static_cast<double>(bp.cardinality());
  const double a2d = static_cast<double>(ap2.cardinality()) /
                     static_cast<double>(bp.cardinality());
  const double alpha = static_cast<double>(a.cardinality()) /
                       static_cast<double>(b.cardinality());
  const double gamma = alpha * a1d * a2d;
  KkGuards g;
  if (auto fail = kk_check_guards(b, bp, bpp, a, a1d, policy, gamma, g)) return *fail;

  const double sigma_floor =
      std::exp(-policy.sigma_floor_const * std::log(2.0 / gamma) / std::sqrt(alpha));
  const u64 floor_count = std::max<u64>(
      1, static_cast<u64>(std::ceil(sigma_floor * static_cast<double>(bpp.cardinality()))));
  const int cap =
      static_cast<int>(std::ceil(policy.kk_cap_mult * std::log(2.0 / sigma_floor))) + 1;

  const std::vector<u64> base = cyclic_convolve_counts(
      cyclic_convolve_counts(indicator_vector(a), indicator_vector(ap1)),
      indicator_vector(ap2));

  ZnSet l = a;
  ZnSet s1 = ap1.intersect(bpp.members());
  ZnSet s2 = ap2.intersect(bpp.members());
  std::array<ZnSet, 2> used = {ZnSet(n), ZnSet(n)};
  u64 k = 1;
  int iters = 0;
  auto verify = [&]() {
    check_pointwise_domination(
        cyclic_convolve_counts(
            cyclic_convolve_counts(indicator_vector(l), indicator_vector(s1)),
            indicator_vector(s2)),
        k, base, "katz_koester_3");
  };
  verify();

  auto attempt_increment = [&](const ZnSet& witness) -> KK3Outcome {
    if (witness.empty()) {
      return TransformFail{FailKind::measured_failure, "S exhausted before increment", 0, 0};
    }
    L2Outcome l2 = l2_density_increment(b, bpp, a, witness, 0.5, policy.l2_nu(), policy);
    if (auto* w = std::get_if<IncrementWitness>(&l2)) {
      Rational needed = policy.increment_factor() * w->old_density;
      if (w->new_density >= needed) return std::move(*w);
      return TransformFail{FailKind::measured_failure,
                           "increment below (1 + c_impl) alpha", 0,
                           w->new_density.to_double()};
    }
    TransformFail f = std::get<TransformFail>(l2);
    f.detail = "floor hit; l2: " + f.detail;
    return f;
  };

  while (static_cast<double>(l.cardinality()) <
         policy.lambda_min * static_cast<double>(b.cardinality())) {
    if (iters >= cap) {
      return TransformFail{FailKind::loop_cap, "iteration cap exceeded",
                           static_cast<double>(iters), static_cast<double>(cap)};
    }
    ZnSet& s = (iters % 2 == 0) ? s1 : s2;
    const ZnSet& side = (iters % 2 == 0) ? ap1 : ap2;
    ZnSet& used_side = used[iters % 2];
    if (s.empty()) return attempt_increment(s);
    std::vector<u64> corr = correlation_counts(a, s);
    u64 best = 0;
    u32 xstar = 0;
    if (!argmax_over_members(corr, bpp.members(), used_side, best, xstar) ||
        best < floor_count) {
      return attempt_increment(s);
    }
    used_side.insert(xstar);
    l = l.unite(side.translate(xstar).intersect(b.members()));
    s = s.intersect(a.translate(static_cast<u32>((n - xstar) % n)));
    ++k;
    ++iters;
    verify();
  }

  Rational lambda_final(static_cast<i64>(l.cardinality()), static_cast<i64>(b.cardinality()));
  Rational sigma1_final(static_cast<i64>(s1.cardinality()), static_cast<i64>(bpp.cardinality()));
  Rational sigma2_final(static_cast<i64>(s2.cardinality()), static_cast<i64>(bpp.cardinality()));
  return StructureTriple{std::move(l), std::move(s1), std::move(s2),
                         lambda_final, sigma1_final, sigma2_final, k, iters};
}

ScalingResult scaling_translate(const BohrSet& b, const ZnSet& a, const BohrSet& bp,
                                const Policy& policy) {
  require(!a.empty(), "scaling_translate: A must be nonempty");
  require(a.is_subset_of(b.members()), "scaling_translate: A must lie inside B");
  require(b.is_super_of(bp), "scaling_translate: B' must be a sub-Bohr set of B");
  const double rho = bp.delta() / b.delta();
  const double d = static_cast<double>(b.dimension());
  require(rho <= policy.c_impl() / d * (1 + 1e-12), "scaling_translate: rho exceeds c/d");
  require(check_regularity(b, policy).pass, "scaling_translate: B must be regular");

  const u64 n = b.modulus();
  std::vector<u64> corr = correlation_counts(a, bp.members());
  u64 best = 0;
  u32 xstar = 0;
  for (u64 w = 0; w < n; ++w) {
    if (corr[w] > best) {
      best = corr[w];
      xstar = static_cast<u32>(w);
    }
  }
  i64 total = 0;
  for (u32 xb : b.members().elements()) total += static_cast<i64>(corr[xb]);

  ScalingResult res{
      xstar,
      a.translate(static_cast<u32>((n - xstar) % n)).intersect(bp.members()),
      Rational(static_cast<i64>(best), static_cast<i64>(bp.cardinality())),
      Rational(total, static_cast<i64>(b.cardinality() * bp.cardinality())),
      averaging_defect(b, bp.members(), rho, policy),
      false};

  kernel_check(res.new_density >= res.average, "scaling_translate: argmax below average");
  Rational alpha(static_cast<i64>(a.cardinality()), static_cast<i64>(b.cardinality()));
  kernel_check(res.average >= alpha - res.defect,
               "scaling_translate: average below alpha - defect");
  kernel_check(res.translated.cardinality() == best,
               "scaling_translate: translate cardinality mismatch");
  res.averaging_bound_met =
      res.new_density.to_double() >= alpha.to_double() - 2.0 * policy.c0 * rho * d - 1e-12;
  return res;
}


namespace {

nlohmann::json witness_json(const IncrementWitness& w) {
  return {{"outcome", "increment"},
          {"argmax", w.argmax},
          {"old_density", {w.old_density.num(), w.old_density.den()}},
          {"new_density", {w.new_density.num(), w.new_density.den()}},
          {"breve_d", w.breve.dimension()},
          {"breve_delta", w.breve.delta()},
          {"breve_card", w.breve.cardinality()}};
}

nlohmann::json fail_json(const TransformFail& f) {
  return {{"outcome", "fail"},
          {"kind", fail_kind_name(f.kind)},
          {"detail", f.detail},
          {"hypothesis", f.hypothesis_value},
          {"measured", f.measured}};
}

}  // namespace

std::string to_json_line(const L2Outcome& out) {
  nlohmann::json j = std::holds_alternative<IncrementWitness>(out)
                         ? witness_json(std::get<IncrementWitness>(out))
                         : fail_json(std::get<TransformFail>(out));
  j["op"] = "l2_density_increment";
  return j.dump() + "\n";
}

std::string to_json_line(const KK2Outcome& out) {
  nlohmann::json j;
  if (const auto* w = std::get_if<IncrementWitness>(&out)) {
    j = witness_json(*w);
  } else if (const auto* sp = std::get_if<StructurePair>(&out)) {
    j = {{"outcome", "structure"},
         {"lambda", {sp->lambda.num(), sp->lambda.den()}},
         {"sigma", {sp->sigma.num(), sp->sigma.den()}},
         {"k", sp->k},
         {"iterations", sp->iterations}};
  } else {
    j = fail_json(std::get<TransformFail>(out));
  }
  j["op"] = "katz_koester_2";
  return j.dump() + "\n";
}

std::string to_json_line(const KK3Outcome& out) {
  nlohmann::json j;
  if (const auto* w = std::get_if<IncrementWitness>(&out)) {
    j = witness_json(*w);
  } else if (const auto* st = std::get_if<StructureTriple>(&out)) {
    j = {{"outcome", "structure"},
         {"lambda", {st->lambda.num(), st->lambda.den()}},
         {"sigma1", {st->sigma1.num(), st->sigma1.den()}},
         {"sigma2", {st->sigma2.num(), st->sigma2.den()}},
         {"k", st->k},
         {"iterations", st->iterations}};
  } else {
    j = fail_json(std::get<TransformFail>(out));
  }
  j["op"] = "katz_koester_3";
  return j.dump() + "\n";
}

std::string to_json_line(const ScalingResult& res) {
  nlohmann::json j = {{"op", "scaling_translate"},
                      {"x", res.x},
                      {"new_density", {res.new_density.num(), res.new_density.den()}},
                      {"average", {res.average.num(), res.average.den()}},
                      {"defect", {res.defect.num(), res.defect.den()}},
                      {"averaging_bound_met", res.averaging_bound_met}};
  return j.dump() + "\n";
}

}  // namespace aplab
