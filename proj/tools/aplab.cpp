#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "aplab/almost_period.hpp"
#include "aplab/cyclic_core.hpp"
#include "aplab/io.hpp"
#include "aplab/pipelines.hpp"
#include "aplab/setgen.hpp"
#include "aplab/sweep.hpp"

namespace {

using namespace aplab;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

BohrSet bohr_from_descriptor(const BohrDescriptor& d, const Policy& policy) {
  return BohrSet::make(d.n, d.gamma, d.delta, policy);
}

int cmd_gen(const std::string& kind, u64 n, double alpha, u64 m, u64 seed,
            const std::string& bohr_file, const std::string& out, const Policy& policy) {
  ZnSet s(2);
  if (kind == "random") {
    s = random_set(n, alpha, seed);
  } else if (kind == "interval") {
    s = interval_set(n, m);
  } else if (kind == "bohr") {
    BohrSet b = bohr_from_descriptor(read_bohr_descriptor(bohr_file), policy);
    s = bohr_sample(b, alpha, seed);
  } else if (kind == "primes") {
    s = prime_set_embedded(n);
  } else {
    std::cerr << "unknown family: " << kind << "\n";
    return 2;
  }
  emit(set_to_text(s), out);
  return 0;
}

int cmd_bohr(const std::string& file, bool describe, bool members, bool ap,
             const Policy& policy) {
  BohrSet b = bohr_from_descriptor(read_bohr_descriptor(file), policy);
  if (describe) {
    RegularityReport reg = check_regularity(b, policy);
    std::printf("N=%llu d=%u delta=%.12g members=%llu density=%.10g boundary_hits=%llu\n",
                static_cast<unsigned long long>(b.modulus()), b.dimension(), b.delta(),
                static_cast<unsigned long long>(b.cardinality()), b.density().to_double(),
                static_cast<unsigned long long>(b.boundary_hits()));
    std::printf("doubling_ok=%d growth_ok(1/2)=%d size_ok=%d regular=%d\n",
                check_doubling(b) ? 1 : 0, check_growth(b, 0.5) ? 1 : 0,
                check_size(b) ? 1 : 0, reg.pass ? 1 : 0);
    std::printf("ap_guarantee=%.6g\n", ap_guarantee(b));
  }
  if (members) {
    std::cout << set_to_text(b.members());
  }
  if (ap) {
    ArithmeticProgression p = ap_in_bohr(b);
    std::printf("start=%u difference=%u length=%llu\n", p.start, p.difference,
                static_cast<unsigned long long>(p.length));
  }
  return 0;
}

int cmd_almost_period(const std::string& f_file, const std::string& s_file,
                      const std::string& t_file, double p, double eps,
                      const std::string& out) {
  ZnSet a = read_set_file(f_file);
  ZnSet s = read_set_file(s_file);
  ZnSet t = t_file.empty() ? ZnSet::full(a.modulus()) : read_set_file(t_file);
  ZnSet x = almost_period_set(GroupFunction::indicator(a), s, t, p, eps);
  emit(set_to_text(x), out);
  return 0;
}

int cmd_oracle(const std::string& fa, const std::string& fb, const std::string& fc, u64 k) {
  VerifiedAP v = oracle_longest_ap(read_set_file(fa), read_set_file(fb), read_set_file(fc), k);
  std::printf("start=%u difference=%u length=%llu k=%llu min_rep=%llu\n", v.ap.start,
              v.ap.difference, static_cast<unsigned long long>(v.ap.length),
              static_cast<unsigned long long>(v.k),
              static_cast<unsigned long long>(v.min_rep));
  return 0;
}

int cmd_pipeline(const std::string& which, const std::string& fa, const std::string& fb,
                 const std::string& fc, const Policy& policy, const std::string& trace_out) {
  ZnSet a = read_set_file(fa);
  ZnSet b = read_set_file(fb);
  ZnSet c = read_set_file(fc);
  PipelineRun run;
  if (which == "cls") {
    run = cls_pipeline(a, b, c, policy);
  } else if (which == "increment") {
    run = increment_pipeline(a, b, c, policy);
  } else if (which == "levelset") {
    run = levelset_pipeline(a, b, c, policy.epsilon, policy);
  } else {
    std::cerr << "unknown pipeline: " << which << "\n";
    return 2;
  }
  std::string jsonl = run_to_jsonl(run);
  if (!trace_out.empty()) write_text_file(trace_out, jsonl);
  std::printf("pipeline=%s branch=%s z=%u start=%u difference=%u length=%llu k=%llu "
              "min_rep=%llu steps=%d\n",
              run.pipeline.c_str(), run.branch.c_str(), run.z, run.ap.ap.start,
              run.ap.ap.difference, static_cast<unsigned long long>(run.ap.ap.length),
              static_cast<unsigned long long>(run.ap.k),
              static_cast<unsigned long long>(run.ap.min_rep), run.steps);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aplab: arithmetic progressions in three-fold sumsets over Z/NZ"};
  app.require_subcommand(1);

  Policy policy;
  std::string policy_file;
  app.add_option("--policy", policy_file, "policy file (key=value)")->check(CLI::ExistingFile);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a set file");
  std::string gen_kind, gen_out, gen_bohr;
  u64 gen_n = 256, gen_m = 1, gen_seed = 1;
  double gen_alpha = 0.5;
  gen->add_option("kind", gen_kind, "random|interval|bohr|primes")->required();
  gen->add_option("--n", gen_n, "modulus (or prime limit for primes)");
  gen->add_option("--alpha", gen_alpha, "density");
  gen->add_option("--m", gen_m, "interval length");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--bohr", gen_bohr, "bohr descriptor file for bohr sampling");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // bohr
  auto* bohr = app.add_subcommand("bohr", "inspect a Bohr set");
  std::string bohr_file;
  bool bohr_describe = false, bohr_members = false, bohr_ap = false;
  bohr->add_option("--file", bohr_file, "bohr descriptor file")->required();
  bohr->add_flag("--describe", bohr_describe, "print parameters and lemma checks");
  bohr->add_flag("--members", bohr_members, "print the member set file");
  bohr->add_flag("--ap", bohr_ap, "print the contained arithmetic progression");

  // almost-period
  auto* ap_cmd = app.add_subcommand("almost-period", "exact almost-period set");
  std::string ap_f, ap_s, ap_t, ap_out;
  double ap_p = 2.0, ap_eps = 0.25;
  ap_cmd->add_option("--f", ap_f, "set file for f = 1_A")->required();
  ap_cmd->add_option("--s", ap_s, "set file for S")->required();
  ap_cmd->add_option("--t", ap_t, "set file for T (default: full group)");
  ap_cmd->add_option("--p", ap_p, "L^p exponent");
  ap_cmd->add_option("--eps", ap_eps, "epsilon");
  ap_cmd->add_option("--out", ap_out, "output file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "longest AP in the K-level set");
  std::string or_a, or_b, or_c;
  u64 or_k = 1;
  oracle->add_option("--a", or_a)->required();
  oracle->add_option("--b", or_b)->required();
  oracle->add_option("--c", or_c)->required();
  oracle->add_option("--k", or_k, "representation threshold");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "run an end-to-end pipeline");
  std::string pipe_kind, pipe_a, pipe_b, pipe_c, pipe_trace;
  u64 pipe_seed = 0;
  pipe->add_option("kind", pipe_kind, "cls|increment|levelset")->required();
  pipe->add_option("--a", pipe_a)->required();
  pipe->add_option("--b", pipe_b)->required();
  pipe->add_option("--c", pipe_c)->required();
  pipe->add_option("--seed", pipe_seed, "reserved; runs are deterministic");
  pipe->add_option("--trace", pipe_trace, "write JSON-lines trace here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a configured sweep grid");
  std::string sweep_config, sweep_out;
  bool sweep_wall = false;
  sweep->add_option("--config", sweep_config, "sweep config file")->required();
  sweep->add_option("--out", sweep_out, "output CSV path")->required();
  sweep->add_flag("--wall-clock", sweep_wall,
                  "fill the wall_ms column (breaks byte-identical reruns)");

  // verify-fixtures
  auto* fixtures = app.add_subcommand("verify-fixtures", "re-run the regression fixtures");
  std::string fixtures_path = "fixtures/fixtures.json";
  bool fixtures_lock = false;
  fixtures->add_option("--fixtures", fixtures_path, "fixtures file");
  fixtures->add_flag("--lock", fixtures_lock, "write current values instead of comparing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!policy_file.empty()) policy = Policy::load(policy_file);

    if (gen->parsed()) {
      return cmd_gen(gen_kind, gen_n, gen_alpha, gen_m, gen_seed, gen_bohr, gen_out, policy);
    }
    if (bohr->parsed()) {
      return cmd_bohr(bohr_file, bohr_describe, bohr_members, bohr_ap, policy);
    }
    if (ap_cmd->parsed()) {
      return cmd_almost_period(ap_f, ap_s, ap_t, ap_p, ap_eps, ap_out);
    }
    if (oracle->parsed()) {
      return cmd_oracle(or_a, or_b, or_c, or_k);
    }
    if (pipe->parsed()) {
      return cmd_pipeline(pipe_kind, pipe_a, pipe_b, pipe_c, policy, pipe_trace);
    }
    if (sweep->parsed()) {
      SweepResult result = run_sweep(SweepConfig::load(sweep_config), policy, sweep_wall);
      write_text_file(sweep_out, result.csv);
      std::fprintf(stderr, "%zu rows, %s\n", result.rows.size(),
                   result.all_ok ? "all ok" : "FAILURES");
      return result.all_ok ? 0 : 1;
    }
    if (fixtures->parsed()) {
      if (fixtures_lock) {
        lock_fixtures(fixtures_path);
        std::fprintf(stderr, "locked %s\n", fixtures_path.c_str());
        return 0;
      }
      FixtureReport report = verify_fixtures(fixtures_path);
      if (!report.error.empty()) {
        std::fprintf(stderr, "fixture file error: %s\n", report.error.c_str());
        return 1;
      }
      for (const auto& e : report.entries) {
        std::printf("%-34s %s\n", e.name.c_str(), e.ok ? "ok" : "DRIFT");
        if (!e.ok) {
          std::printf("  expected: %s\n  actual:   %s\n", e.expected.c_str(),
                      e.actual.c_str());
        }
      }
      return report.all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
