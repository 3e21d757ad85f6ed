#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aplab/policy.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// Flat key=value config; repeated keys form grid axes.  Grid order is the
// nested product pipeline x N x density x seed index, in file order of the
// repeated values.
struct SweepConfig {
  std::vector<std::string> pipelines;
  std::vector<u64> ns;
  std::vector<double> densities;
  std::string family = "random";  // random | interval
  u64 base_seed = 1;
  int seeds = 1;
  double omega = 0.0;
  double epsilon = 0.5;

  static SweepConfig parse(const std::string& text);
  static SweepConfig load(const std::string& path);
  size_t grid_size() const {
    return pipelines.size() * ns.size() * densities.size() * static_cast<size_t>(seeds);
  }
};

struct SweepRow {
  u64 n = 0;
  std::string family;
  double alpha = 0, beta = 0, gamma = 0;
  std::string pipeline;
  double omega = 0;
  u64 k = 0;
  u64 ap_length = 0;
  double guaranteed_length = 0;
  u64 min_rep = 0;
  int steps = 0;
  std::string branch;
  std::string status = "ok";
  long wall_ms = -1;
  // iteration-discipline results, rechecked from the trace
  int increment_steps = 0;
  bool growth_ok = true;
  bool within_cap = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::string csv;
  bool all_ok = true;
};

// Deterministic: byte-identical CSV for identical (config, policy).  Wall
// times go into the wall_ms column only when wall_clock is set; the default
// leaves the column empty so repeated invocations stay byte-identical.
SweepResult run_sweep(const SweepConfig& config, const Policy& base_policy,
                      bool wall_clock = false);

u64 fnv1a64(const std::string& s);

// Regression fixtures: named deterministic values recomputed on demand.
struct FixtureReport {
  struct Entry {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
  };
  std::vector<Entry> entries;
  bool all_ok = false;
  std::string error;  // nonempty when the fixture file is missing/bad
};

std::vector<std::pair<std::string, std::function<std::string()>>> fixture_registry();
void lock_fixtures(const std::string& path);
FixtureReport verify_fixtures(const std::string& path);

}  // namespace aplab
