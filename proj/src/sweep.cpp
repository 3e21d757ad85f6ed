#include "aplab/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "aplab/almost_period.hpp"
#include "aplab/io.hpp"
#include "aplab/pipelines.hpp"
#include "aplab/prng.hpp"
#include "aplab/setgen.hpp"
#include "aplab/transforms.hpp"

#include "json.hpp"

namespace aplab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

SweepConfig SweepConfig::parse(const std::string& text) {
  SweepConfig c;
  c.pipelines.clear();
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    require(eq != std::string::npos, "sweep config: malformed line '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "pipeline") c.pipelines.push_back(value);
    else if (key == "N") c.ns.push_back(std::stoull(value));
    else if (key == "density") c.densities.push_back(std::stod(value));
    else if (key == "family") c.family = value;
    else if (key == "base_seed") c.base_seed = std::stoull(value);
    else if (key == "seeds") c.seeds = std::stoi(value);
    else if (key == "omega") c.omega = std::stod(value);
    else if (key == "epsilon") c.epsilon = std::stod(value);
    else throw std::invalid_argument("sweep config: unknown key '" + key + "'");
  }
  require(c.family == "random" || c.family == "interval",
          "sweep config: family must be random or interval");
  require(c.seeds >= 0, "sweep config: seeds must be nonnegative");
  for (const auto& p : c.pipelines) {
    require(p == "cls" || p == "increment" || p == "levelset",
            "sweep config: unknown pipeline '" + p + "'");
  }
  return c;
}

SweepConfig SweepConfig::load(const std::string& path) {
  return parse(read_text_file(path));
}

u64 fnv1a64(const std::string& s) {
  u64 h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

int pool_size(size_t grid) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("APLAB_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<size_t>(hw, std::max<size_t>(grid, 1)));
}

SweepRow run_grid_point(const SweepConfig& config, const Policy& base_policy, u64 n,
                        double density, const std::string& pipeline, u64 seed,
                        bool wall_clock) {
  SweepRow row;
  row.n = n;
  row.family = config.family;
  row.pipeline = pipeline;
  row.omega = pipeline == "levelset" ? config.epsilon : config.omega;

  auto t0 = std::chrono::steady_clock::now();
  try {
    ZnSet a(2), b(2), c(2);
    if (config.family == "interval") {
      u64 m = std::max<u64>(1, static_cast<u64>(std::llround(density * static_cast<double>(n))));
      a = interval_set(n, m);
      b = a;
      c = a;
    } else {
      a = random_set(n, density, mix_seed(seed, 1));
      b = random_set(n, density, mix_seed(seed, 2));
      c = random_set(n, density, mix_seed(seed, 3));
    }
    row.alpha = a.density().to_double();
    row.beta = b.density().to_double();
    row.gamma = c.density().to_double();

    Policy policy = base_policy;
    policy.omega = config.omega;
    policy.epsilon = config.epsilon;

    PipelineRun run;
    if (pipeline == "cls") {
      run = cls_pipeline(a, b, c, policy);
    } else if (pipeline == "increment") {
      run = increment_pipeline(a, b, c, policy);
    } else {
      run = levelset_pipeline(a, b, c, config.epsilon, policy);
    }

    row.k = run.ap.k;
    row.ap_length = run.ap.ap.length;
    row.guaranteed_length = run.guaranteed_length;
    row.min_rep = run.ap.min_rep;
    row.steps = run.steps;
    row.branch = run.branch;

    // iteration discipline, rechecked from the recorded exact densities
    double alpha_tilde = row.alpha * row.beta * row.gamma;
    int cap = static_cast<int>(std::ceil(std::log(1.0 / alpha_tilde) /
                                         std::log(1.0 + policy.c_impl()))) +
              4;
    row.within_cap = run.steps <= cap;
    for (size_t i = 0; i + 1 < run.trace.size(); ++i) {
      if (run.trace[i].outcome.rfind("increment", 0) == 0) {
        ++row.increment_steps;
        Rational before = run.trace[i].alpha[0] * run.trace[i].alpha[1];
        Rational after = run.trace[i + 1].alpha[0] * run.trace[i + 1].alpha[1];
        if (!(after >= policy.product_growth_factor() * before)) row.growth_ok = false;
      }
    }
  } catch (const std::exception& e) {
    row.status = std::string("error:") + e.what();
  }
  if (wall_clock) {
    auto t1 = std::chrono::steady_clock::now();
    row.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  return row;
}

std::string render_csv(const std::vector<SweepRow>& rows, bool wall_clock) {
  std::ostringstream os;
  os << "N,family,alpha,beta,gamma,pipeline,omega,K,ap_length,guaranteed_length,"
        "min_rep,steps,branch,status,wall_ms\n";
  for (const auto& r : rows) {
    os << r.n << "," << r.family << "," << fmt_double(r.alpha) << ","
       << fmt_double(r.beta) << "," << fmt_double(r.gamma) << "," << r.pipeline << ","
       << fmt_double(r.omega) << "," << r.k << "," << r.ap_length << ","
       << fmt_double(r.guaranteed_length) << "," << r.min_rep << "," << r.steps << ","
       << r.branch << "," << r.status << ",";
    if (wall_clock && r.wall_ms >= 0) os << r.wall_ms;
    os << "\n";
  }
  return os.str();
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const Policy& base_policy,
                      bool wall_clock) {
  SweepResult result;
  const size_t grid = config.grid_size();
  result.rows.resize(grid);
  if (grid > 0) {
    // grid order: pipeline x N x density x seed index
    struct Point {
      std::string pipeline;
      u64 n;
      double density;
      u64 seed;
    };
    std::vector<Point> points;
    points.reserve(grid);
    size_t index = 0;
    for (const auto& p : config.pipelines) {
      for (u64 n : config.ns) {
        for (double d : config.densities) {
          for (int s = 0; s < config.seeds; ++s) {
            points.push_back(Point{p, n, d, mix_seed(config.base_seed, index)});
            ++index;
          }
        }
      }
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= points.size()) return;
        const Point& pt = points[i];
        result.rows[i] = run_grid_point(config, base_policy, pt.n, pt.density,
                                        pt.pipeline, pt.seed, wall_clock);
      }
    };
    int workers = pool_size(grid);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& r : result.rows) {
    if (r.status != "ok") result.all_ok = false;
  }
  result.csv = render_csv(result.rows, wall_clock);
  return result;
}

namespace {

std::string fixture_random_card() {
  return std::to_string(random_set(1024, 0.3, 7).cardinality());
}

std::string fixture_regular_dilate() {
  BohrSet b = BohrSet::make(128, {1}, 1.0);
  RegularDilate rd = find_regular_dilate(b);
  return "kappa=" + fmt_double(rd.kappa) + ",card=" + std::to_string(rd.bohr.cardinality());
}

std::string fixture_almost_period_64() {
  ZnSet a = random_set(64, 0.25, 11);
  ZnSet s = random_set(64, 0.25, 12);
  ZnSet x = almost_period_set(GroupFunction::indicator(a), s, ZnSet::full(64), 2.0, 0.5);
  return std::to_string(x.cardinality());
}

std::string fixture_annihilate_512() {
  BohrSet b = find_regular_dilate(BohrSet::make(512, {1}, 1.5)).bohr;
  std::vector<u32> members = b.members().elements();
  SplitMix64 gen(21);
  ZnSet x(512);
  for (int i = 0; i < 20; ++i) {
    x.insert(members[gen.next_below(members.size())]);
  }
  BohrSet bp = spectrum_annihilate(b, x, 0.5);
  return "d=" + std::to_string(bp.dimension()) + ",card=" + std::to_string(bp.cardinality());
}

ZnSet nonempty_bohr_sample(const BohrSet& b, double alpha, u64 seed) {
  for (;; ++seed) {
    ZnSet s = bohr_sample(b, alpha, seed);
    if (!s.empty()) return s;
  }
}

// Chain built from realized densities so the rho guards hold exactly.
struct Kk2Setup {
  Policy policy;
  BohrSet b;
  ZnSet a;
  BohrSet bp;
  ZnSet ap;
  BohrSet bpp;
  Kk2Setup()
      : b(find_regular_dilate(BohrSet::make(512, {1}, 1.5)).bohr),
        a(nonempty_bohr_sample(b, 0.4, 31)),
        bp(find_regular_dilate(
               b.dilate(0.999 * policy.c_impl() * a.density().to_double() * 512.0 /
                        static_cast<double>(b.cardinality()) /
                        static_cast<double>(b.dimension())))
               .bohr),
        ap(nonempty_bohr_sample(bp, 0.4, 32)),
        bpp(find_regular_dilate(
                bp.dilate(0.999 * policy.c_impl() *
                          (static_cast<double>(ap.cardinality()) /
                           static_cast<double>(bp.cardinality())) /
                          static_cast<double>(b.dimension())))
                .bohr) {}
};

std::string kk2_outcome_to_string(const KK2Outcome& out) {
  if (const auto* w = std::get_if<IncrementWitness>(&out)) {
    std::ostringstream os;
    os << "increment:new=" << w->new_density;
    return os.str();
  }
  if (const auto* sp = std::get_if<StructurePair>(&out)) {
    std::ostringstream os;
    os << "structure:lambda=" << sp->lambda << ",sigma=" << sp->sigma << ",k=" << sp->k
       << ",iters=" << sp->iterations;
    return os.str();
  }
  const auto& f = std::get<TransformFail>(out);
  return "fail:" + fail_kind_name(f.kind);
}

std::string fixture_kk2_512() {
  Kk2Setup s;
  return kk2_outcome_to_string(katz_koester_2(s.b, s.bp, s.bpp, s.a, s.ap));
}

std::string fixture_kk3_512() {
  Kk2Setup s;
  ZnSet ap2 = nonempty_bohr_sample(s.bp, 0.4, 33);
  double gamma = s.a.density().to_double() * 512.0 / s.b.cardinality();
  gamma *= static_cast<double>(s.ap.cardinality()) / s.bp.cardinality();
  gamma *= static_cast<double>(ap2.cardinality()) / s.bp.cardinality();
  BohrSet bpp3 = find_regular_dilate(
                     s.bp.dilate(0.999 * Policy{}.c_impl() * gamma /
                                 static_cast<double>(s.b.dimension())))
                     .bohr;
  KK3Outcome out = katz_koester_3(s.b, s.bp, bpp3, s.a, s.ap, ap2);
  if (const auto* w = std::get_if<IncrementWitness>(&out)) {
    std::ostringstream os;
    os << "increment:new=" << w->new_density;
    return os.str();
  }
  if (const auto* st = std::get_if<StructureTriple>(&out)) {
    std::ostringstream os;
    os << "structure:lambda=" << st->lambda << ",sigma1=" << st->sigma1
       << ",sigma2=" << st->sigma2 << ",k=" << st->k << ",iters=" << st->iterations;
    return os.str();
  }
  const auto& f = std::get<TransformFail>(out);
  return "fail:" + fail_kind_name(f.kind);
}

std::string fixture_scaling_512() {
  Kk2Setup s;
  ScalingResult res = scaling_translate(s.b, s.a, s.bp);
  std::ostringstream os;
  os << "x=" << res.x << ",alpha'=" << res.new_density;
  return os.str();
}

std::string run_summary(const PipelineRun& run) {
  std::ostringstream os;
  os << "branch=" << run.branch << ",len=" << run.ap.ap.length << ",k=" << run.ap.k
     << ",min_rep=" << run.ap.min_rep << ",steps=" << run.steps;
  return os.str();
}

std::string fixture_cls_2048() {
  ZnSet a = random_set(2048, 0.3, 41);
  ZnSet b = random_set(2048, 0.3, 42);
  ZnSet c = random_set(2048, 0.3, 43);
  return run_summary(cls_pipeline(a, b, c));
}

std::string fixture_increment_1024() {
  ZnSet a = random_set(1024, 0.35, 51);
  ZnSet b = random_set(1024, 0.35, 52);
  ZnSet c = random_set(1024, 0.35, 53);
  PipelineRun run = increment_pipeline(a, b, c);
  return run_summary(run) + ",trace=" + std::to_string(fnv1a64(run_to_jsonl(run)));
}

std::string fixture_levelset_1024() {
  ZnSet a = random_set(1024, 0.35, 61);
  ZnSet b = random_set(1024, 0.35, 62);
  ZnSet c = random_set(1024, 0.35, 63);
  PipelineRun run = levelset_pipeline(a, b, c, 0.5);
  return run_summary(run) + ",trace=" + std::to_string(fnv1a64(run_to_jsonl(run)));
}

std::string fixture_sweep_3x3() {
  SweepConfig config;
  config.pipelines = {"cls", "increment", "levelset"};
  config.ns = {512, 1024, 2048};
  config.densities = {0.2, 0.3, 0.4};
  config.base_seed = 1;
  config.seeds = 1;
  SweepResult result = run_sweep(config, Policy{});
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(result.csv));
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, std::function<std::string()>>> fixture_registry() {
  return {
      {"setgen/random_1024_0.3_7", fixture_random_card},
      {"bohr/regular_dilate_128_1_1.0", fixture_regular_dilate},
      {"almost_period/X_64", fixture_almost_period_64},
      {"transforms/annihilate_512", fixture_annihilate_512},
      {"transforms/kk2_512", fixture_kk2_512},
      {"transforms/kk3_512", fixture_kk3_512},
      {"transforms/scaling_512", fixture_scaling_512},
      {"pipelines/cls_2048", fixture_cls_2048},
      {"pipelines/increment_1024", fixture_increment_1024},
      {"pipelines/levelset_1024", fixture_levelset_1024},
      {"sweep/3x3_seed1", fixture_sweep_3x3},
  };
}

void lock_fixtures(const std::string& path) {
  nlohmann::json j;
  for (const auto& [name, fn] : fixture_registry()) {
    j[name] = fn();
  }
  write_text_file(path, j.dump(2) + "\n");
}

FixtureReport verify_fixtures(const std::string& path) {
  FixtureReport report;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const std::exception& e) {
    report.error = e.what();
    report.all_ok = false;
    return report;
  }
  report.all_ok = true;
  for (const auto& [name, fn] : fixture_registry()) {
    FixtureReport::Entry entry;
    entry.name = name;
    if (!j.contains(name)) {
      entry.expected = "<missing>";
      entry.actual = fn();
      entry.ok = false;
    } else {
      entry.expected = j[name].get<std::string>();
      entry.actual = fn();
      entry.ok = entry.expected == entry.actual;
    }
    if (!entry.ok) report.all_ok = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace aplab
