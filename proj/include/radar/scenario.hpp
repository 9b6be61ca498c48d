#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radar/convex_set.hpp"
#include "radar/game.hpp"
#include "radar/losses.hpp"

namespace radar {

// A loss environment plus the decision set and declared constants.
// Losses are produced round by round so adaptive adversaries fit the same
// interface; oblivious scenarios just ignore the played point.
struct Scenario {
  std::string kind;
  std::shared_ptr<const Manifold> manifold;
  GeodesicBall set;
  int T = 1;
  double delta = 0.0;
  double G = 1.0;
  double L = 0.0;  // 0 when the family is not smooth
  double d_eval = 0.0;
  std::uint64_t seed = 0;
  Point start;  // common first iterate for every learner

  // Must be called with t = 1..T in order. Stateful for adaptive kinds;
  // call reset() before reusing.
  std::function<LossFunction(int t, const Point& played)> next_loss;
  std::function<void()> reset;
  // One comparator per round, given the realised losses.
  std::function<std::vector<Point>(const LossSequence&)> comparators;
  // Pre-generated sequence, when the scenario is oblivious.
  std::shared_ptr<const LossSequence> fixed_losses;

  std::string comparator_rule;
  std::string notes;  // substitutions worth stating in reports
};

// Constants shared by squared-distance scenarios whose anchors lie within
// `anchor_reach` of the set center: G solves G = 2 (radius + anchor_reach + delta G),
// the evaluation radius is G / 2 and L = 2 zeta(kappa, G / 2).
struct SquaredDistanceConstants {
  double G, L, d_eval;
};
SquaredDistanceConstants squared_distance_constants(const Manifold& m, double radius, double anchor_reach,
                                                    double delta);

// Poincare ball, anchors +-(t/2T) e_i weighted 1/(2 dim); decision set the
// geodesic ball of radius ln 3 at the origin; comparator the origin.
Scenario gen_drifting_mean(int T, int dim, double delta, std::uint64_t seed);

// Poincare ball, n anchors drawn in the geodesic ball B(e_1/2, T^-alpha),
// flipped in sign every round; decision set the ball of radius ln 3 + T^-alpha
// at the origin; comparator the per-round minimizer.
Scenario gen_alternating(int T, int n, double alpha, double delta, std::uint64_t seed);

// Busemann losses on diagonal SPD chosen online by the optimal adversary
// against whatever the learner plays; decision set the ball of radius D/2 at I.
Scenario gen_adversarial_game(int n, int T, std::vector<double> budgets, double D, std::uint64_t seed);

struct CustomRound {
  std::vector<Point> anchors;
  Eigen::VectorXd weights;
};

// Squared-distance losses with user anchors. `rounds` holds either one entry
// (repeated every round) or T entries; empty means the all-zero loss.
struct CustomSpec {
  std::shared_ptr<const Manifold> manifold;
  GeodesicBall set;
  int T = 1;
  double delta = 0.0;
  std::vector<CustomRound> rounds;
  // "offline_minimizer_per_round", "fixed_point" or "piecewise_constant"
  std::string comparator = "offline_minimizer_per_round";
  std::optional<Point> fixed_point;  // defaults to the set center
  int segments = 1;                  // for piecewise_constant
  std::uint64_t seed = 0;
};

Scenario gen_custom(const CustomSpec& spec);

struct ScenarioAudit {
  double max_grad_ratio = 0.0;    // max ||grad|| / G
  double max_smooth_ratio = 0.0;  // max smoothness quotient / L
  int samples = 0;
  bool ok = true;
};

// Samples points of the enlarged set N_{delta G} and checks the declared G
// and L on every round's loss (or the first `max_rounds` spread evenly).
ScenarioAudit audit_scenario(const Scenario& s, int points_per_round = 8, int max_rounds = 64);

}  // namespace radar
