// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria.  Expects to run from the repository root so
// that fixtures/fixtures.json resolves.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "aplab/almost_period.hpp"
#include "aplab/cyclic_core.hpp"
#include "aplab/pipelines.hpp"
#include "aplab/prng.hpp"
#include "aplab/setgen.hpp"
#include "aplab/sweep.hpp"
#include "oracles.hpp"

using namespace aplab;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int idx, const char* name, bool pass, double secs, double budget,
            const std::string& detail) {
  bool ok = pass && secs < budget;
  if (!ok) ++failures;
  std::printf("criterion %d (%s): %s (%s) [%.2f s / %.0f s]\n", idx, name,
              ok ? "PASS" : "FAIL", detail.c_str(), secs, budget);
  std::fflush(stdout);
}

GroupFunction random_function(u64 n, SplitMix64& gen) {
  GroupFunction f(n);
  for (u64 x = 0; x < n; ++x) {
    f.at(x) = cplx(2.0 * gen.next_double() - 1.0, 2.0 * gen.next_double() - 1.0);
  }
  return f;
}

void criterion1_exact_kernel() {
  Timer timer;
  SplitMix64 gen(1001);
  int mismatches = 0;
  long checked = 0;
  for (u64 n : {16ULL, 64ULL, 128ULL}) {
    for (int rep = 0; rep < 100; ++rep) {
      ZnSet a = random_set(n, 0.05 + 0.9 * gen.next_double(), gen.next());
      ZnSet b = random_set(n, 0.05 + 0.9 * gen.next_double(), gen.next());
      ZnSet c = random_set(n, 0.05 + 0.9 * gen.next_double(), gen.next());
      if (a.empty() || b.empty() || c.empty()) continue;
      if (representation_counts(a, b, c) != oracles::rep_counts_triple_loop(a, b, c)) {
        ++mismatches;
      }
      ++checked;
    }
  }
  report(1, "exact-kernel equivalence", mismatches == 0, timer.seconds(), 5.0,
         std::to_string(checked) + " triples, " + std::to_string(mismatches) +
             " mismatches");
}

void criterion2_fourier_identities() {
  Timer timer;
  SplitMix64 gen(1002);
  int conv_bad = 0, parseval_bad = 0;
  for (u64 n : {60ULL, 64ULL, 101ULL, 1024ULL}) {
    for (int rep = 0; rep < 200; ++rep) {
      GroupFunction f = random_function(n, gen);
      GroupFunction g = random_function(n, gen);
      GroupFunction fh = dft(f), gh = dft(g);
      GroupFunction ch = dft(convolve(f, g));
      double scale = 1.0 + fh.max_abs() * gh.max_abs();
      for (u64 k = 0; k < n; ++k) {
        if (std::abs(ch[k] - fh[k] * gh[k]) > 1e-9 * scale) {
          ++conv_bad;
          break;
        }
      }
      cplx direct = inner_product(f, g);
      cplx freq(0, 0);
      for (u64 k = 0; k < n; ++k) freq += fh[k] * std::conj(gh[k]);
      if (std::abs(direct - freq) > 1e-9 * (1.0 + lp_norm(f, 2) * lp_norm(g, 2))) {
        ++parseval_bad;
      }
    }
  }
  report(2, "Fourier identities", conv_bad == 0 && parseval_bad == 0, timer.seconds(), 5.0,
         "convolution violations " + std::to_string(conv_bad) + ", Parseval violations " +
             std::to_string(parseval_bad));
}

struct BohrCorpus {
  std::vector<BohrSet> sets;
};

BohrCorpus make_corpus() {
  BohrCorpus corpus;
  SplitMix64 gen(20240601);
  static const u64 ns[5] = {256, 512, 1024, 2048, 4096};
  for (int i = 0; i < 200; ++i) {
    u64 n = ns[gen.next_below(5)];
    u32 d = 1 + static_cast<u32>(gen.next_below(4));
    std::vector<u32> gamma;
    for (u32 j = 0; j < d; ++j) gamma.push_back(1 + static_cast<u32>(gen.next_below(n - 1)));
    double delta = 0.1 + 1.9 * gen.next_double();
    corpus.sets.push_back(BohrSet::make(n, gamma, delta));
  }
  return corpus;
}

void criterion3_bohr_lemmas(const BohrCorpus& corpus) {
  Timer timer;
  int lemma_bad = 0, ap_bad = 0;
  for (const BohrSet& b : corpus.sets) {
    if (!check_doubling(b)) ++lemma_bad;
    if (!check_size(b)) ++lemma_bad;
    ArithmeticProgression ap = ap_in_bohr(b);
    if (static_cast<double>(ap.length) < ap_guarantee(b) - 1e-9) ++ap_bad;
    for (u32 e : ap.elements()) {
      if (!b.members().contains(e)) {
        ++ap_bad;
        break;
      }
    }
  }
  report(3, "Bohr lemma suite", lemma_bad == 0 && ap_bad == 0, timer.seconds(), 30.0,
         "lemma violations " + std::to_string(lemma_bad) + ", AP violations " +
             std::to_string(ap_bad));
}

void criterion4_regularity(const BohrCorpus& corpus) {
  Timer timer;
  Policy policy;
  int succeeded = 0, defect_bad = 0;
  std::vector<int> failed_ids;
  for (size_t i = 0; i < corpus.sets.size(); ++i) {
    const BohrSet& b = corpus.sets[i];
    try {
      RegularDilate rd = find_regular_dilate(b, policy);
      ++succeeded;
      double rho = 1.0 / (2.0 * policy.c0 * rd.bohr.dimension());
      int sampled = 0;
      for (u32 x : rd.bohr.members().elements()) {
        if (rd.bohr.chord(x) > rho * rd.bohr.delta()) continue;
        Rational defect = averaging_defect(rd.bohr, x, rho, policy);
        if (defect.to_double() > 2.0 * policy.c0 * rho * rd.bohr.dimension() + 1e-12) {
          ++defect_bad;
        }
        if (++sampled == 20) break;
      }
    } catch (const NoRegularDilate&) {
      failed_ids.push_back(static_cast<int>(i));
    }
  }
  std::string failed = "none";
  if (!failed_ids.empty()) {
    failed = "";
    for (int id : failed_ids) failed += std::to_string(id) + " ";
  }
  double rate = static_cast<double>(succeeded) / static_cast<double>(corpus.sets.size());
  report(4, "regularity", rate >= 0.95 && defect_bad == 0, timer.seconds(), 60.0,
         "success " + std::to_string(succeeded) + "/200, defect violations " +
             std::to_string(defect_bad) + ", failures: " + failed);
}

void criterion5_almost_periodicity() {
  Timer timer;
  SplitMix64 gen(1005);
  const u32 ell = 2;
  const double theta = 0.5;
  int violations = 0, tested = 0;
  for (int rep = 0; rep < 20; ++rep) {
    ZnSet a = random_set(256, 0.1 + 0.5 * gen.next_double(), gen.next());
    ZnSet s = random_set(256, 0.1 + 0.5 * gen.next_double(), gen.next());
    if (a.empty() || s.empty()) continue;
    GroupFunction f = GroupFunction::indicator(a);
    for (double p : {2.0, 4.0}) {
      ZnSet x = almost_period_set(f, s, ZnSet::full(256), p, theta / (2 * ell));
      double defect = smoothing_defect(f, s, x, ell, p);
      if (defect > theta * lp_norm(f, p) * (1 + 1e-9)) ++violations;
      ++tested;
    }
  }
  report(5, "almost-periodicity", violations == 0, timer.seconds(), 60.0,
         std::to_string(tested) + " (f,S,p) cases, " + std::to_string(violations) +
             " violations");
}

struct SweepOutcome {
  int master_violations = 0;
  int growth_violations = 0;
  int cap_violations = 0;
  int runs = 0;
  int errors = 0;
};

void run_and_check(const std::string& pipeline, u64 n, double density, u64 seed,
                   const Policy& policy, SweepOutcome& out) {
  ZnSet a = random_set(n, density, mix_seed(seed, 1));
  ZnSet b = random_set(n, density, mix_seed(seed, 2));
  ZnSet c = random_set(n, density, mix_seed(seed, 3));
  PipelineRun run;
  try {
    if (pipeline == "cls") {
      run = cls_pipeline(a, b, c, policy);
    } else if (pipeline == "increment") {
      run = increment_pipeline(a, b, c, policy);
    } else {
      run = levelset_pipeline(a, b, c, policy.epsilon, policy);
    }
  } catch (const std::exception&) {
    ++out.errors;
    return;
  }
  ++out.runs;
  // independent oracle verification of the master invariant
  std::vector<u64> r = oracles::rep_counts_double_loop(a, b, c);
  for (u32 e : run.ap.ap.elements()) {
    if (r[e] < run.ap.k) {
      ++out.master_violations;
      break;
    }
  }
  // iteration discipline
  double alpha_tilde =
      a.density().to_double() * b.density().to_double() * c.density().to_double();
  int cap = static_cast<int>(std::ceil(std::log(1.0 / alpha_tilde) /
                                       std::log(1.0 + policy.c_impl()))) +
            4;
  if (run.steps > cap) ++out.cap_violations;
  for (size_t i = 0; i + 1 < run.trace.size(); ++i) {
    if (run.trace[i].outcome.rfind("increment", 0) == 0) {
      Rational before = run.trace[i].alpha[0] * run.trace[i].alpha[1];
      Rational after = run.trace[i + 1].alpha[0] * run.trace[i + 1].alpha[1];
      if (!(after >= policy.product_growth_factor() * before)) ++out.growth_violations;
    }
  }
}

SweepOutcome sweep_outcome;

void criterion6_pipeline_soundness() {
  Timer timer;
  Policy policy;
  policy.omega = 0.0;
  for (const char* pipeline : {"cls", "increment", "levelset"}) {
    size_t index = 0;
    for (u64 n : {512ULL, 1024ULL, 2048ULL}) {
      for (double density : {0.2, 0.3, 0.4}) {
        for (int s = 0; s < 5; ++s) {
          run_and_check(pipeline, n, density, mix_seed(6, index++), policy, sweep_outcome);
        }
      }
    }
  }
  int window_ok = 0;
  for (int rep = 0; rep < 20; ++rep) {
    ZnSet a = random_set(2048, 0.3, mix_seed(99, 3 * rep));
    ZnSet b = random_set(2048, 0.3, mix_seed(99, 3 * rep + 1));
    ZnSet c = random_set(2048, 0.3, mix_seed(99, 3 * rep + 2));
    PipelineRun run = cls_pipeline(a, b, c, policy);
    if (run.window_verified) ++window_ok;
  }
  bool pass = sweep_outcome.master_violations == 0 && sweep_outcome.errors == 0 &&
              sweep_outcome.runs == 135 && window_ok >= 18;
  report(6, "pipeline soundness", pass, timer.seconds(), 600.0,
         std::to_string(sweep_outcome.runs) + " runs, " +
             std::to_string(sweep_outcome.master_violations) + " master violations, " +
             std::to_string(sweep_outcome.errors) + " errors, counting window " +
             std::to_string(window_ok) + "/20");
}

void criterion7_iteration_discipline() {
  Timer timer;
  bool pass =
      sweep_outcome.growth_violations == 0 && sweep_outcome.cap_violations == 0;
  report(7, "iteration discipline", pass, timer.seconds(), 60.0,
         std::to_string(sweep_outcome.growth_violations) + " growth violations, " +
             std::to_string(sweep_outcome.cap_violations) + " cap violations");
}

void criterion8_freiman() {
  Timer timer;
  SplitMix64 gen(1008);
  int bad = 0, tested = 0;
  for (u64 n : {10ULL, 20ULL, 30ULL, 40ULL, 50ULL, 60ULL}) {
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<u32> a;
      for (u64 v = 1; v <= n && a.size() < 25; ++v) {
        if (gen.next_double() < 0.4) a.push_back(static_cast<u32>(v));
      }
      if (a.empty()) continue;
      if (!oracles::freiman_iff_holds(a, n)) ++bad;
      ++tested;
    }
  }
  if (!oracles::freiman_iff_holds(primes_upto(60), 60)) ++bad;
  ++tested;
  report(8, "Freiman embedding", bad == 0, timer.seconds(), 10.0,
         std::to_string(tested) + " subsets, " + std::to_string(bad) + " failures");
}

void criterion9_reproducibility() {
  Timer timer;
  SweepConfig config;
  config.pipelines = {"cls", "increment", "levelset"};
  config.ns = {512, 1024};
  config.densities = {0.3};
  config.seeds = 2;
  config.base_seed = 9;
  SweepResult r1 = run_sweep(config, Policy{});
  SweepResult r2 = run_sweep(config, Policy{});
  bool identical = r1.csv == r2.csv;
  FixtureReport fixtures = verify_fixtures("fixtures/fixtures.json");
  std::string drifts;
  for (const auto& e : fixtures.entries) {
    if (!e.ok) drifts += e.name + " ";
  }
  bool pass = identical && fixtures.all_ok;
  report(9, "reproducibility", pass, timer.seconds(), 300.0,
         std::string(identical ? "sweep byte-identical" : "SWEEP DIFFERS") +
             (fixtures.all_ok ? ", fixtures ok"
                              : ", fixture drift: " + drifts + fixtures.error));
}

}  // namespace

int main() {
  criterion1_exact_kernel();
  criterion2_fourier_identities();
  BohrCorpus corpus = make_corpus();
  criterion3_bohr_lemmas(corpus);
  criterion4_regularity(corpus);
  criterion5_almost_periodicity();
  criterion6_pipeline_soundness();
  criterion7_iteration_discipline();
  criterion8_freiman();
  criterion9_reproducibility();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return failures;
}
