#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "radar/manifold.hpp"

namespace radar::suites {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 means none
};

// Manifolds every property suite sweeps over.
std::vector<ManifoldSpec> test_manifolds();

CriterionResult geometry_properties(int cases = 1000);
CriterionResult comparison_laws(int cases = 1000);
CriterionResult loss_properties(int cases = 1000);
CriterionResult mean_properties(int cases = 500);
CriterionResult pathwise_bounds();
CriterionResult game_values();
CriterionResult sublinear_regret();
// Runs the ordering experiment; RADAR_v / RADAR_b confinement from these runs
// is folded into improper_confinement when both come from scenario_suite().
CriterionResult best_of_both_worlds();
CriterionResult improper_confinement();

// One optimistic-Hedge sequence with random losses and hints. Returns the
// slack RHS - LHS of the pathwise inequality, minimised over experts.
double optimistic_hedge_slack(int N, int T, double beta, std::uint64_t seed);

// "geometry" -> 1-4, "bounds" -> 5, "game" -> 6, "scenarios" -> 7-9, "all".
std::vector<CriterionResult> run_suite(const std::string& suite);

std::string format_line(const CriterionResult& r);

}  // namespace radar::suites
