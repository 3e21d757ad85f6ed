#include "aplab/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aplab/almost_period.hpp"
#include "aplab/cyclic_core.hpp"
#include "aplab/ntt.hpp"

#include "json.hpp"

namespace aplab {

namespace {

struct RunCandidate {
  u64 length = 0;
  u32 difference = 1;
  u32 start = 0;
};

bool better(const RunCandidate& a, const RunCandidate& b) {
  if (a.length != b.length) return a.length > b.length;
  if (a.difference != b.difference) return a.difference < b.difference;
  return a.start < b.start;
}

}  // namespace

ArithmeticProgression longest_ap_in_set(const ZnSet& u) {
  const u64 n = u.modulus();
  ArithmeticProgression ap;
  ap.modulus = n;
  if (u.empty()) return ap;
  if (u.cardinality() == n) {
    ap.start = 0;
    ap.difference = 1;
    ap.length = n;
    return ap;
  }
  RunCandidate best;
  best.start = u.elements().front();
  best.length = 1;
  std::vector<char> seq;
  for (u64 t = 1; t < n; ++t) {
    const u64 g = std::gcd(n, t);
    const u64 orbit = n / g;
    for (u64 s = 0; s < g; ++s) {
      seq.assign(orbit, 0);
      u64 pos = s;
      u64 zero_at = orbit;
      u64 inside = 0;
      for (u64 j = 0; j < orbit; ++j) {
        if (u.contains(static_cast<u32>(pos))) {
          seq[j] = 1;
          ++inside;
        } else if (zero_at == orbit) {
          zero_at = j;
        }
        pos += t;
        if (pos >= n) pos -= n;
      }
      if (inside == orbit) {
        RunCandidate cand{orbit, static_cast<u32>(t), static_cast<u32>(s)};
        if (better(cand, best)) best = cand;
        continue;
      }
      if (inside < best.length) continue;
      // circular runs: rotate so the scan starts right after a hole
      u64 run = 0;
      for (u64 k = 1; k <= orbit; ++k) {
        u64 idx = zero_at + k;
        if (idx >= orbit) idx -= orbit;
        if (seq[idx]) {
          ++run;
          if (k == orbit) {
            u64 first = (zero_at + k - run + 1) % orbit;
            RunCandidate cand{run, static_cast<u32>(t),
                              static_cast<u32>((s + first % orbit * t) % n)};
            if (better(cand, best)) best = cand;
          }
        } else {
          if (run > 0) {
            u64 first = (zero_at + k - run) % orbit;
            RunCandidate cand{run, static_cast<u32>(t),
                              static_cast<u32>((s + first % orbit * t) % n)};
            if (better(cand, best)) best = cand;
          }
          run = 0;
        }
      }
    }
    if (best.length == n) break;
  }
  ap.start = best.start;
  ap.difference = best.difference;
  ap.length = best.length;
  return ap;
}

VerifiedAP verify_ap(const ArithmeticProgression& ap, const ZnSet& a, const ZnSet& b,
                     const ZnSet& c, u64 k) {
  VerifiedAP out;
  out.ap = ap;
  out.k = k;
  if (ap.length == 0) return out;
  std::vector<u64> r = representation_counts(a, b, c);
  out.rep_counts.reserve(ap.length);
  out.min_rep = UINT64_MAX;
  for (u32 e : ap.elements()) {
    kernel_check(r[e] >= k, "verify_ap: element below the representation threshold");
    out.rep_counts.push_back(r[e]);
    out.min_rep = std::min(out.min_rep, r[e]);
  }
  return out;
}

VerifiedAP oracle_longest_ap(const ZnSet& a, const ZnSet& b, const ZnSet& c, u64 k) {
  require(!a.empty() && !b.empty() && !c.empty(), "oracle_longest_ap: empty input set");
  std::vector<u64> r = representation_counts(a, b, c);
  ZnSet level(a.modulus());
  for (u64 w = 0; w < a.modulus(); ++w) {
    if (r[w] >= k) level.insert(static_cast<u32>(w));
  }
  ArithmeticProgression ap = longest_ap_in_set(level);
  VerifiedAP out;
  out.ap = ap;
  out.k = k;
  if (ap.length == 0) return out;
  out.min_rep = UINT64_MAX;
  for (u32 e : ap.elements()) {
    kernel_check(r[e] >= k, "oracle_longest_ap: level-set bookkeeping broken");
    out.rep_counts.push_back(r[e]);
    out.min_rep = std::min(out.min_rep, r[e]);
  }
  return out;
}

ArithmeticProgression thick_ap(const BohrSet& b, const ZnSet& v_set, double v,
                               const Policy& policy) {
  require(v > 0.0 && v < 1.0, "thick_ap: v must lie in (0,1)");
  require(v_set.is_subset_of(b.members()), "thick_ap: V must lie inside B");
  const u64 missing = b.cardinality() - v_set.cardinality();
  require(static_cast<double>(missing) <=
              v * static_cast<double>(b.cardinality()) * (1 + 1e-12),
          "thick_ap: V is not (1-v)-dense in B");

  const u64 need = static_cast<u64>(std::ceil(4.0 / v));
  ArithmeticProgression base = ap_in_bohr(b);
  const double formula = policy.c_impl() * b.delta() *
                         std::pow(static_cast<double>(b.modulus()),
                                  1.0 / static_cast<double>(b.dimension())) /
                         static_cast<double>(b.dimension());
  if (1.0 / v > formula && need > base.length) {
    throw NoThickAp("thick_ap: hypothesis guard failed (4/v = " + std::to_string(need) +
                    ", base AP length " + std::to_string(base.length) + ")");
  }

  const u64 n = b.modulus();
  std::vector<u32> elems = base.elements();
  for (u64 m = 1; m <= base.length; ++m) {
    if ((need - 1) * m >= base.length) break;  // stride too coarse to fit
    if ((m * base.difference) % n == 0) continue;  // degenerate stride on a wrapped base
    for (u64 r = 0; r < m; ++r) {
      u64 run = 0;
      u64 run_start = r;
      for (u64 idx = r; idx < base.length + m; idx += m) {
        bool in = idx < base.length && v_set.contains(elems[idx]);
        if (in) {
          if (run == 0) run_start = idx;
          ++run;
        } else {
          if (run >= need) {
            ArithmeticProgression ap;
            ap.modulus = n;
            ap.start = elems[run_start];
            ap.difference = static_cast<u32>((static_cast<u64>(base.difference) * m) % n);
            ap.length = run;
            return ap;
          }
          run = 0;
        }
      }
    }
  }
  ArithmeticProgression exhaustive = longest_ap_in_set(v_set);
  if (exhaustive.length >= need) return exhaustive;
  throw NoThickAp("thick_ap: no progression of length " + std::to_string(need) +
                  " found despite preconditions");
}

namespace {

ArithmeticProgression translate_ap(const ArithmeticProgression& ap, u32 z) {
  ArithmeticProgression out = ap;
  out.start = static_cast<u32>((static_cast<u64>(ap.start) + z) % ap.modulus);
  return out;
}

std::array<int, 3> density_descending_order(const std::array<const ZnSet*, 3>& sets) {
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return sets[i]->cardinality() > sets[j]->cardinality();
  });
  return order;
}

u64 ceil_div_u128(unsigned __int128 num, u64 den) {
  return static_cast<u64>((num + den - 1) / den);
}

u64 omega_threshold_counts(double omega, u64 bohr_card) {
  if (omega <= 0.0) return 0;
  long double t = static_cast<long double>(omega) * bohr_card * bohr_card;
  return static_cast<u64>(std::floor(t));
}

struct IterationEngine {
  const Policy& policy;
  bool levelset;
  double epsilon;

  u64 n;
  std::array<ZnSet, 3> sets;
  std::array<const ZnSet*, 3> originals;
  PipelineRun run;

  double omega = 0;
  double v = 0;

  IterationEngine(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3, const Policy& pol,
                  bool level_mode, double eps)
      : policy(pol), levelset(level_mode), epsilon(eps), n(a1.modulus()),
        sets{a1, a2, a3}, originals{&a1, &a2, &a3} {
    require(a1.modulus() == a2.modulus() && a2.modulus() == a3.modulus(),
            "pipeline: modulus mismatch");
    require(!a1.empty() && !a2.empty() && !a3.empty(), "pipeline: empty input set");
    run.pipeline = levelset ? "levelset" : "increment";
    run.n = n;
    run.order = density_descending_order(originals);
    std::array<ZnSet, 3> permuted = {sets[run.order[0]], sets[run.order[1]],
                                     sets[run.order[2]]};
    sets = std::move(permuted);

    double alpha_tilde = 1.0;
    for (const auto& s : sets) alpha_tilde *= s.density().to_double();
    if (levelset) {
      require(epsilon > 0.0 && epsilon < 1.0, "levelset_pipeline: epsilon must lie in (0,1)");
      const double log_term = std::log(2.0 / alpha_tilde);
      const double alpha1 = sets[0].density().to_double();
      double l_raw = policy.c_impl() * std::sqrt(epsilon) * std::pow(alpha1, 0.25) *
                     std::sqrt(std::log(static_cast<double>(n))) *
                     std::pow(log_term, -3.5);
      double l = std::max(l_raw, std::log(2.0) * (1.0 + 1e-9));
      v = 2.0 * std::exp(-l);
      omega = std::pow(static_cast<double>(n), -policy.c_impl() * epsilon / log_term);
    } else {
      omega = policy.omega;
    }
  }

  int hard_cap() const {
    double alpha_tilde = 1.0;
    for (const auto& s : sets) alpha_tilde *= s.density().to_double();
    return static_cast<int>(
               std::ceil(std::log(1.0 / alpha_tilde) / std::log(1.0 + policy.c_impl()))) +
           4;
  }

  StepRecord make_record(int index, const BohrSet& b) const {
    StepRecord rec;
    rec.index = index;
    rec.bohr_gamma = b.frequencies();
    rec.bohr_delta = b.delta();
    rec.bohr_card = b.cardinality();
    for (int j = 0; j < 3; ++j) {
      rec.alpha[j] = Rational(static_cast<i64>(sets[j].cardinality()),
                              static_cast<i64>(b.cardinality()));
    }
    rec.v = v;
    return rec;
  }

  void finalize_constructive(const BohrSet& final_b, const ArithmeticProgression& local_ap,
                             u32 z, u64 k, const std::string& outcome) {
    run.trace.back().outcome = outcome;
    run.z = z;
    run.final_gamma = final_b.frequencies();
    run.final_delta = final_b.delta();
    run.final_bohr_card = final_b.cardinality();
    run.guaranteed_length = ap_guarantee(final_b);
    ArithmeticProgression shifted = translate_ap(local_ap, z);
    run.ap = verify_ap(shifted, *originals[0], *originals[1], *originals[2], k);
    run.branch = "constructive";
    run.steps = static_cast<int>(run.trace.size());
    run.final_sets.assign(sets.begin(), sets.end());
  }

  void finalize_fallback(const std::string& note) {
    if (!run.trace.empty()) run.trace.back().outcome = "fallback:" + note;
    run.note = note;
    u64 k;
    if (levelset) {
      long double target = std::pow(static_cast<long double>(n),
                                    static_cast<long double>(2.0 - epsilon));
      k = std::max<u64>(1, static_cast<u64>(std::ceil(target)));
    } else {
      k = omega_threshold_counts(omega, n) + 1;
    }
    run.ap = oracle_longest_ap(*originals[0], *originals[1], *originals[2], k);
    run.z = 0;
    run.branch = "oracle-only";
    run.steps = static_cast<int>(run.trace.size());
    run.guaranteed_length = 0;
    run.final_sets.assign(sets.begin(), sets.end());
  }

  // applies the increment witness: translates all three sets into breve
  bool apply_increment(const BohrSet& breve, int which, u32 step_index) {
    (void)step_index;
    std::array<u32, 3> xs{};
    std::array<ZnSet, 3> next{ZnSet(n), ZnSet(n), ZnSet(n)};
    std::array<Rational, 3> new_alpha;
    for (int j = 0; j < 3; ++j) {
      std::vector<u64> corr = correlation_counts(sets[j], breve.members());
      u64 best = 0;
      u32 arg = 0;
      for (u64 w = 0; w < n; ++w) {
        if (corr[w] > best) {
          best = corr[w];
          arg = static_cast<u32>(w);
        }
      }
      xs[j] = arg;
      next[j] = sets[j].translate(static_cast<u32>((n - arg) % n)).intersect(breve.members());
      kernel_check(next[j].cardinality() == best, "pipeline: translate count mismatch");
      new_alpha[j] = Rational(static_cast<i64>(best), static_cast<i64>(breve.cardinality()));
    }
    // exact product-growth discipline on alpha_1 alpha_2
    Rational before = run.trace.back().alpha[0] * run.trace.back().alpha[1];
    Rational after = new_alpha[0] * new_alpha[1];
    if (!(after >= policy.product_growth_factor() * before)) {
      return false;
    }
    run.trace.back().translate = xs;
    run.trace.back().outcome =
        "increment:a" + std::to_string(which + 1);
    sets = std::move(next);
    return true;
  }

  PipelineRun execute() {
    BohrSet b = BohrSet::make(n, {0}, 2.0, policy);
    const int cap = hard_cap();
    run.trace.push_back(make_record(1, b));

    for (int step = 1; step <= cap; ++step) {
      try {
      const u32 d = b.dimension();
      double alpha_tilde = 1.0;
      for (int j = 0; j < 3; ++j) alpha_tilde *= run.trace.back().alpha[j].to_double();

      // rho_i = (c_impl / 4 C0) alpha~ / (2 i^2 d), then the regular kappa;
      // keeps every scaling loss below c_impl alpha_j / (2 i^2)
      double base_rho = policy.c_impl() * alpha_tilde /
                        (4.0 * policy.c0 * 2.0 * step * step * static_cast<double>(d));
      RegularDilate rd = find_regular_dilate(b.dilate(base_rho), policy);
      BohrSet bp = std::move(rd.bohr);
      run.trace.back().rho = base_rho * rd.kappa;

      ScalingResult st3 = scaling_translate(b, sets[2], bp, policy);
      const ZnSet& a3p = st3.translated;

      std::vector<u64> r = representation_counts(sets[0], sets[1], sets[2]);
      const u64 threshold = omega_threshold_counts(omega, b.cardinality());
      run.trace.back().omega_threshold = static_cast<double>(threshold);
      const u64 k_step = threshold + 1;

      ZnSet upper(n);  // V: level set above the threshold, within B'
      ZnSet lower(n);  // U: complement within B'
      for (u32 y : bp.members().elements()) {
        u64 w = (static_cast<u64>(st3.x) + y) % n;
        if (r[w] > threshold) {
          upper.insert(y);
        } else {
          lower.insert(y);
        }
      }

      const u64 accum = run_accumulated_translate();
      const u32 z = static_cast<u32>((st3.x + accum) % n);

      if (!levelset) {
        if (lower.empty()) {
          finalize_constructive(bp, ap_in_bohr(bp), z, k_step, "terminate");
          return run;
        }
      } else {
        double density_gap = static_cast<double>(bp.cardinality() - upper.cardinality());
        if (density_gap <= v * static_cast<double>(bp.cardinality()) * (1 + 1e-12)) {
          try {
            ArithmeticProgression thick = thick_ap(bp, upper, v, policy);
            finalize_constructive(bp, thick, z, k_step, "terminate");
            return run;
          } catch (const NoThickAp& e) {
            finalize_fallback(std::string("thick-ap: ") + e.what());
            return run;
          }
        }
      }

      // density-increment branch
      std::optional<BohrSet> breve;
      int which = -1;
      {
        double rho_p_base = policy.c_impl() *
                            (levelset ? v * alpha_tilde : st3.new_density.to_double()) /
                            static_cast<double>(d);
        RegularDilate rdpp = find_regular_dilate(bp.dilate(rho_p_base), policy);
        BohrSet bpp = std::move(rdpp.bohr);

        auto handle_structure = [&](const ZnSet& l_set, const ZnSet& s_for_cs,
                                    double lambda_d) -> std::optional<TransformFail> {
          RegularDilate rdppp = find_regular_dilate(
              bpp.dilate(policy.c_impl() / static_cast<double>(bpp.dimension())), policy);
          BohrSet bppp = std::move(rdppp.bohr);
          const double alpha2 = run.trace.back().alpha[1].to_double();
          double p = 2.0 + std::log(1.0 / alpha2);
          u32 ell = static_cast<u32>(
              std::max(1.0, std::ceil((8.0 + std::log2(1.0 / alpha2)) / 4.0)));
          double theta = std::pow(lambda_d, 1.0 - 1.0 / p) / (4.0 * std::exp(1.0));
          double eps_cs = std::min(0.5, theta / (2.0 * ell));
          ZnSet x_set = almost_period_set(GroupFunction::indicator(l_set), s_for_cs,
                                          bppp.members(), p, eps_cs)
                            .intersect(bppp.members());
          if (x_set.empty()) {
            return TransformFail{FailKind::measured_failure, "empty almost-period set", 0, 0};
          }
          L2Outcome l2 = l2_density_increment(b, bppp, sets[1], x_set, 0.5,
                                              policy.l2_nu(), policy);
          if (auto* w = std::get_if<IncrementWitness>(&l2)) {
            Rational needed = policy.increment_factor() * w->old_density;
            if (w->new_density >= needed) {
              breve = std::move(w->breve);
              which = 1;
              return std::nullopt;
            }
            return TransformFail{FailKind::measured_failure,
                                 "l2 increment below (1 + c_impl) alpha", 0,
                                 w->new_density.to_double()};
          }
          return std::get<TransformFail>(l2);
        };

        if (!levelset) {
          KK2Outcome kk = katz_koester_2(b, bp, bpp, sets[0], a3p, policy);
          if (auto* w = std::get_if<IncrementWitness>(&kk)) {
            breve = std::move(w->breve);
            which = 0;
          } else if (auto* sp = std::get_if<StructurePair>(&kk)) {
            if (auto fail = handle_structure(sp->l, sp->s, sp->lambda.to_double())) {
              finalize_fallback("kk2-structure: " + fail_kind_name(fail->kind) + " " +
                                fail->detail);
              return run;
            }
          } else {
            TransformFail f = std::get<TransformFail>(kk);
            finalize_fallback("kk2: " + fail_kind_name(f.kind) + " " + f.detail);
            return run;
          }
        } else {
          ZnSet neg_u = lower.negate();
          KK3Outcome kk = katz_koester_3(b, bp, bpp, sets[0], neg_u, a3p, policy);
          if (auto* w = std::get_if<IncrementWitness>(&kk)) {
            breve = std::move(w->breve);
            which = 0;
          } else if (auto* st = std::get_if<StructureTriple>(&kk)) {
            if (auto fail = handle_structure(st->l, st->s1, st->lambda.to_double())) {
              finalize_fallback("kk3-structure: " + fail_kind_name(fail->kind) + " " +
                                fail->detail);
              return run;
            }
          } else {
            TransformFail f = std::get<TransformFail>(kk);
            finalize_fallback("kk3: " + fail_kind_name(f.kind) + " " + f.detail);
            return run;
          }
        }
      }

      if (!breve) {
        finalize_fallback("no increment produced");
        return run;
      }
      if (!apply_increment(*breve, which, static_cast<u32>(step))) {
        finalize_fallback("product-growth below (1 + c_impl/4)");
        return run;
      }
      b = std::move(*breve);
      run.trace.push_back(make_record(step + 1, b));
      } catch (const NoRegularDilate& e) {
        finalize_fallback(std::string("no-regular-dilate: ") + e.what());
        return run;
      } catch (const NoThickAp& e) {
        finalize_fallback(std::string("thick-ap: ") + e.what());
        return run;
      } catch (const std::invalid_argument& e) {
        finalize_fallback(std::string("guard: ") + e.what());
        return run;
      }
    }
    finalize_fallback("iteration cap exceeded");
    return run;
  }

  u64 run_accumulated_translate() const {
    u64 acc = 0;
    for (const auto& rec : run.trace) {
      acc = (acc + rec.translate[0] + rec.translate[1] + rec.translate[2]) % n;
    }
    return acc;
  }
};

}  // namespace

PipelineRun cls_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                         const Policy& policy) {
  require(a1.modulus() == a2.modulus() && a2.modulus() == a3.modulus(),
          "cls_pipeline: modulus mismatch");
  require(!a1.empty() && !a2.empty() && !a3.empty(), "cls_pipeline: empty input set");
  const u64 n = a1.modulus();

  PipelineRun run;
  run.pipeline = "cls";
  run.n = n;
  std::array<const ZnSet*, 3> orig = {&a1, &a2, &a3};
  run.order = density_descending_order(orig);
  const ZnSet& s1 = *orig[run.order[0]];
  const ZnSet& s2 = *orig[run.order[1]];
  const ZnSet& s3 = *orig[run.order[2]];

  const double alpha1 = s1.density().to_double();
  const double alpha3 = s3.density().to_double();
  double p = 2.0 + std::ceil(std::log(1.0 / alpha3));
  double theta = alpha1 / (2.0 * std::exp(1.0));

  std::vector<u64> r = representation_counts(a1, a2, a3);
  u64 best = 0;
  u32 z = 0;
  for (u64 w = 0; w < n; ++w) {
    if (r[w] > best) {
      best = r[w];
      z = static_cast<u32>(w);
    }
  }
  run.z = z;
  const unsigned __int128 prod = static_cast<unsigned __int128>(a1.cardinality()) *
                                 a2.cardinality() * a3.cardinality();
  const u64 k = ceil_div_u128(prod, 2 * n);
  run.ap.k = k;

  u64 witness = 0;
  for (int attempt = 0; attempt <= policy.max_theta_retries; ++attempt) {
    try {
      ClsAlmostPeriods cls = cls_bohr_almost_periods(s1, s2, p, theta, policy);
      bool ok = true;
      for (u32 x : cls.bohr.members().elements()) {
        u64 y = (static_cast<u64>(z) + x) % n;
        // 1_{A1}*1_{A2}*1_{A3}(y) >= alpha~/2, exactly: 2 N r(y) >= |A1||A2||A3|
        if (static_cast<unsigned __int128>(2 * n) * r[y] < prod) {
          ok = false;
          witness = y;
          break;
        }
      }
      if (ok) {
        run.window_verified = true;
        run.final_gamma = cls.bohr.frequencies();
        run.final_delta = cls.bohr.delta();
        run.final_bohr_card = cls.bohr.cardinality();
        run.guaranteed_length = ap_guarantee(cls.bohr);
        run.ap = verify_ap(translate_ap(ap_in_bohr(cls.bohr), z), a1, a2, a3, k);
        run.branch = "constructive";
        run.note = "halvings=" + std::to_string(cls.halvings) +
                   ",theta=" + std::to_string(theta);
        return run;
      }
    } catch (const ClsFailure&) {
      // fall through to the retry with a halved theta
    }
    theta *= 0.5;
  }
  run.ap = oracle_longest_ap(a1, a2, a3, k);
  run.branch = "oracle-only";
  run.note = "counting-bound verification failed after theta retries, witness y=" +
             std::to_string(witness);
  return run;
}

PipelineRun increment_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                               const Policy& policy) {
  IterationEngine engine(a1, a2, a3, policy, false, 0.0);
  return engine.execute();
}

PipelineRun levelset_pipeline(const ZnSet& a1, const ZnSet& a2, const ZnSet& a3,
                              double epsilon, const Policy& policy) {
  IterationEngine engine(a1, a2, a3, policy, true, epsilon);
  return engine.execute();
}

std::vector<ZnSet> replay_iteration(const std::array<ZnSet, 3>& initial,
                                    const std::vector<StepRecord>& trace,
                                    const Policy& policy) {
  require(!trace.empty(), "replay_iteration: empty trace");
  const u64 n = initial[0].modulus();
  std::vector<ZnSet> sets(initial.begin(), initial.end());
  for (size_t i = 1; i < trace.size(); ++i) {
    BohrSet b = BohrSet::make(n, trace[i].bohr_gamma, trace[i].bohr_delta, policy);
    for (int j = 0; j < 3; ++j) {
      u32 x = trace[i - 1].translate[j];
      sets[j] = sets[j].translate(static_cast<u32>((n - x) % n)).intersect(b.members());
    }
  }
  return sets;
}

std::string run_to_jsonl(const PipelineRun& run) {
  std::string out;
  for (const auto& rec : run.trace) {
    nlohmann::json j;
    j["type"] = "step";
    j["pipeline"] = run.pipeline;
    j["i"] = rec.index;
    j["d"] = rec.bohr_gamma.size();
    j["delta"] = rec.bohr_delta;
    j["bohr_card"] = rec.bohr_card;
    j["alpha"] = {rec.alpha[0].to_double(), rec.alpha[1].to_double(),
                  rec.alpha[2].to_double()};
    j["translate"] = rec.translate;
    j["rho"] = rec.rho;
    j["omega_threshold"] = rec.omega_threshold;
    j["v"] = rec.v;
    j["outcome"] = rec.outcome;
    out += j.dump();
    out += "\n";
  }
  nlohmann::json j;
  j["type"] = "result";
  j["pipeline"] = run.pipeline;
  j["n"] = run.n;
  j["order"] = run.order;
  j["z"] = run.z;
  j["branch"] = run.branch;
  j["note"] = run.note;
  j["window_verified"] = run.window_verified;
  j["steps"] = run.steps;
  j["ap"] = {{"start", run.ap.ap.start},
             {"difference", run.ap.ap.difference},
             {"length", run.ap.ap.length},
             {"k", run.ap.k},
             {"min_rep", run.ap.min_rep}};
  j["guaranteed_length"] = run.guaranteed_length;
  out += j.dump();
  out += "\n";
  return out;
}

}  // namespace aplab
