#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "radar/runner.hpp"

namespace radar {

// Parsed run configuration. `raw` keeps the JSON text so the summary can echo it.
struct RunConfig {
  std::string raw;
  std::string algorithm = "radar";
  TuningMode mode = TuningMode::Oracle;
  MeanKind mean = MeanKind::Frechet;
  std::optional<double> eta;
  double delta = 0.1;
  int T = 100;
  std::uint64_t seed = 0;
  int reps = 1;
};

// Reads the config and builds the scenario for `seed`. Throws DomainError on
// bad or incompatible settings.
RunConfig parse_run_config(const std::string& json_text);
Scenario build_scenario(const RunConfig& cfg, std::uint64_t seed);

// JSON summary (schema 1) of one run.
std::string summary_json(const RunOutcome& r, const Scenario& s, const RunConfig& cfg);

struct RunFiles {
  std::filesystem::path csv, json;
  double final_regret = 0.0;
  bool all_bounds_ok = true;
};

// Runs `cfg.reps` repetitions with seeds seed, seed+1, ... and writes
// trace_<seed>.csv and summary_<seed>.json into `out`.
std::vector<RunFiles> run_config(const RunConfig& cfg, const std::filesystem::path& out);

}  // namespace radar
