#include <doctest.h>

#include <cmath>

#include "radar/errors.hpp"
#include "radar/game.hpp"

using namespace radar;
using namespace radar::game;

TEST_CASE("optimal play attains the value") {
  const GameConfig cfg = GameConfig::constant(3, 100, 1.0, 2.0);
  const GameResult r = play_game(cfg, optimal_player(), optimal_adversary());
  CHECK(r.value == doctest::Approx(10.0));
  CHECK(r.regret == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::abs(r.linear_part) < 1e-10);
  CHECK(lifted_regret(cfg, r) == doctest::Approx(r.regret).epsilon(1e-8));
}

TEST_CASE("adversary move by hand") {
  GameState s(3);
  s.sum = Eigen::Vector3d(0, 1, 0);
  s.t = 2;
  const Eigen::VectorXd x = adversary_move(s, Eigen::Vector3d(1, 0, 0), 2.5);
  CHECK((x - Eigen::Vector3d(0, 0, 2.5)).norm() < 1e-12);

  GameState first(4);
  const Eigen::VectorXd x1 = adversary_move(first, Eigen::VectorXd::Zero(4), 1.5);
  CHECK(x1.norm() == doctest::Approx(1.5));
  CHECK(x1[0] == doctest::Approx(1.5));
}

TEST_CASE("player move by hand") {
  const int T = 25;
  const GameConfig cfg = GameConfig::constant(3, T, 1.0, 2.0);
  GameState s(3);
  CHECK(player_move(s, cfg).norm() == 0.0);
  s.sum = Eigen::Vector3d(1, 0, 0);
  s.t = 2;
  const Eigen::VectorXd y = player_move(s, cfg);
  CHECK((y - Eigen::Vector3d(1.0 / std::sqrt(T), 0, 0)).norm() < 1e-15);
}

TEST_CASE("pythagoras under the optimal adversary") {
  GameConfig cfg;
  cfg.n = 5;
  cfg.T = 30;
  cfg.D = 3.0;
  for (int t = 0; t < cfg.T; ++t) cfg.budgets.push_back(0.5 + 0.1 * (t % 7));
  const GameResult r = play_game(cfg, baseline_player("random", 4), optimal_adversary());
  double acc = 0.0;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(cfg.n);
  for (int t = 0; t < cfg.T; ++t) {
    sum += r.state.X[t];
    acc += cfg.budgets[t] * cfg.budgets[t];
    CHECK(sum.norm() == doctest::Approx(std::sqrt(acc)).epsilon(1e-10));
    CHECK(std::abs(r.state.X[t].dot(r.state.Y[t])) < 1e-10);
  }
  CHECK(r.regret >= game_value(cfg) - 1e-9);
  CHECK(lifted_regret(cfg, r) == doctest::Approx(r.regret).epsilon(1e-8));
}

TEST_CASE("value sandwich against baselines") {
  const GameConfig cfg = GameConfig::constant(4, 60, 1.0, 2.0);
  const double v = game_value(cfg);
  for (const char* kind : {"zero", "follow_leader", "fixed_axis", "half_leader"})
    CHECK(play_game(cfg, baseline_player(kind, 1), optimal_adversary()).regret >= v - 1e-9);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(play_game(cfg, optimal_player(), random_adversary(seed, 0.3)).regret <= v + 1e-9);
}

TEST_CASE("bad configurations") {
  CHECK_THROWS_AS(GameConfig::constant(2, 10, 1.0, 2.0).validate(), DomainError);
  GameConfig cfg = GameConfig::constant(3, 10, 1.0, 2.0);
  cfg.budgets[3] = -1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  const GameConfig ok = GameConfig::constant(3, 5, 1.0, 2.0);
  const Adversary greedy = [](const GameState&, const Eigen::VectorXd&, double b) {
    return Eigen::VectorXd::Constant(3, b);
  };
  CHECK_THROWS_AS(play_game(ok, optimal_player(), greedy), DomainError);
}

TEST_CASE("segmented comparators") {
  const SegmentPlan one = dynamic_comparator_reduction(1.5, 100, 2.0, 1.0);
  CHECK(one.segments == 1);
  CHECK(one.value == doctest::Approx(game_value(GameConfig::constant(3, 100, 1.0, 2.0))));
  const SegmentPlan full = dynamic_comparator_reduction(100 * 2.0, 100, 2.0, 1.0);
  CHECK(full.segments == 100);
  CHECK(full.value == doctest::Approx(100.0));
  const SegmentPlan odd = dynamic_comparator_reduction(7.0, 50, 2.0, 1.0);
  CHECK(odd.segments == 4);
  CHECK(odd.padded_T % odd.segments == 0);
  CHECK(odd.padded_T >= 50);
  CHECK(odd.path_bound <= 7.0);
  CHECK(odd.ranges.front().first == 1);
  CHECK(odd.ranges.back().second == odd.padded_T);
  CHECK(play_segmented(odd, 3, 1.0, 2.0) == doctest::Approx(odd.value).epsilon(1e-9));
  CHECK_THROWS_AS(dynamic_comparator_reduction(-1.0, 10, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(dynamic_comparator_reduction(25.0, 10, 2.0, 1.0), DomainError);
}
