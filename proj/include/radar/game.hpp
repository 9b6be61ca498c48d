#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "radar/manifold.hpp"

namespace radar::game {

// The game lives in the tangent space at the identity of n x n diagonal SPD
// matrices; a move is the diagonal, and the metric there is the plain dot
// product. Player moves are in the unit ball, scaled by D/2 when scored.
struct GameConfig {
  int n = 3;
  int T = 1;
  std::vector<double> budgets;  // G_1..G_T
  double D = 2.0;

  static GameConfig constant(int n, int T, double G, double D);
  void validate() const;
};

struct GameState {
  std::vector<Eigen::VectorXd> X, Y;
  Eigen::VectorXd sum;  // X_1 + ... + X_{t-1}
  int t = 1;            // current round, 1-based

  explicit GameState(int n) : sum(Eigen::VectorXd::Zero(n)) {}
};

using Player = std::function<Eigen::VectorXd(const GameState&, const GameConfig&)>;
using Adversary = std::function<Eigen::VectorXd(const GameState&, const Eigen::VectorXd& y, double budget)>;

// Budget-G direction orthogonal to both y and the running sum; Gram-Schmidt
// from the lowest-index basis vector outside their span.
Eigen::VectorXd adversary_move(const GameState& s, const Eigen::VectorXd& y, double budget);

// sum / sqrt(||sum||^2 + sum_{s>=t} G_s^2)
Eigen::VectorXd player_move(const GameState& s, const GameConfig& cfg);

struct GameResult {
  double regret = 0.0;       // (D/2) (sum_t -<X_t,Y_t> + ||sum_t X_t||)
  double linear_part = 0.0;  // sum_t -<X_t,Y_t>, unscaled
  double value = 0.0;        // (D/2) sqrt(sum G_t^2)
  GameState state;
};

// Rejects out-of-budget moves with DomainError.
GameResult play_game(const GameConfig& cfg, const Player& player, const Adversary& adversary);

double game_value(const GameConfig& cfg);

// Same game scored through Busemann losses on the diagonal SPD manifold:
// plays Exp_I((D/2) Y_t), losses ||X_t|| * b_{X_t/||X_t||}, comparator the
// best fixed point. Should agree with GameResult::regret.
double lifted_regret(const GameConfig& cfg, const GameResult& r);

Player optimal_player();
Adversary optimal_adversary();

// Simple players for lower-bound checks. kind in
// {"zero", "follow_leader", "fixed_axis", "random", "half_leader"}.
Player baseline_player(const std::string& kind, std::uint64_t seed = 0);
// Random direction with random length <= budget; `skew` biases toward e_1.
Adversary random_adversary(std::uint64_t seed, double skew = 0.0);

struct SegmentPlan {
  int segments = 1;        // ceil(tau / D), at least 1
  int length = 1;          // rounds per segment
  int padded_T = 1;        // segments * length >= T
  double value = 0.0;      // (G D / 2) sqrt(padded_T * segments)
  double path_bound = 0.0; // (segments - 1) D, the comparator path length used
  std::vector<std::pair<int, int>> ranges;  // inclusive 1-based round ranges
};

// Splits the horizon into ceil(tau/D) equal blocks, padding T up when the
// block count does not divide it. Requires 0 <= tau <= T D.
SegmentPlan dynamic_comparator_reduction(double tau, int T, double D, double G);

// Plays optimal vs optimal independently on each block; returns the summed regret.
double play_segmented(const SegmentPlan& plan, int n, double G, double D);

}  // namespace radar::game
