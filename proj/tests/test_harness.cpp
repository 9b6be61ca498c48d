#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "radar/config.hpp"
#include "radar/errors.hpp"
#include "radar/runner.hpp"

using namespace radar;
using json = nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunOutcome run(Scenario& s, const std::string& algo, TuningMode mode = TuningMode::Oracle) {
  RunOptions o;
  o.algorithm = algo;
  o.mode = mode;
  return run_algorithm(s, o);
}

}  // namespace

TEST_CASE("drifting mean end point and constants") {
  const int T = 40;
  Scenario s = gen_drifting_mean(T, 2, 0.1, 0);
  Point played = s.start;
  LossFunction last;
  for (int t = 1; t <= T; ++t) last = s.next_loss(t, played);
  const double ln3 = std::log(3.0);
  CHECK(last.value(s.manifold->origin()) == doctest::Approx(ln3 * ln3).epsilon(1e-12));
  const ScenarioAudit a = audit_scenario(s);
  CHECK(a.ok);
  CHECK(a.max_grad_ratio <= 1.0);
  CHECK(a.max_smooth_ratio <= 1.0);
}

TEST_CASE("alternating losses really alternate") {
  Scenario s = gen_alternating(30, 4, 0.5, 0.1, 2);
  const RunOutcome r = run(s, "rogd");
  CHECK(r.trace.back().V_t_proxy > 0.0);
  CHECK(audit_scenario(s).ok);
  // the per-round minimizers jump between the two anchor clouds
  CHECK(r.trace.back().P_t > 0.5 * (s.T - 1));
}

TEST_CASE("R-OGD trace is consistent and within its bound") {
  Scenario s = gen_drifting_mean(150, 2, 0.1, 7);
  const RunOutcome r = run(s, "rogd");
  double acc = 0.0;
  for (const auto& row : r.trace) {
    acc += row.loss - row.comp_loss;
    CHECK(row.cum_regret == doctest::Approx(acc).epsilon(1e-10));
    CHECK(row.bound_ok);
    CHECK(std::isfinite(row.bound_value));
  }
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    CHECK(r.trace[i].P_t >= r.trace[i - 1].P_t);
    CHECK(r.trace[i].F_t >= r.trace[i - 1].F_t);
  }
  CHECK(r.confined_play_fraction == 1.0);
}

TEST_CASE("zero losses give zero regret") {
  const char* cfg = R"({
    "algorithm": "radar", "T": 20, "seed": 1,
    "manifold": {"kind": "spd_affine", "dim": 2},
    "decision_set": {"center": "origin", "radius": 1.0},
    "scenario": {"kind": "custom", "loss": "zero"}
  })";
  const RunConfig c = parse_run_config(cfg);
  Scenario s = build_scenario(c, c.seed);
  const RunOutcome r = run(s, "radar");
  for (const auto& row : r.trace) {
    CHECK(row.loss == 0.0);
    CHECK(row.cum_regret == 0.0);
  }
}

TEST_CASE("adaptive meta rates carry no pathwise bound") {
  Scenario s = gen_drifting_mean(30, 2, 0.1, 1);
  const RunOutcome r = run(s, "radar_s", TuningMode::Adaptive);
  CHECK_FALSE(r.bound_applicable);
  CHECK(std::isinf(r.trace.back().bound_value));
}

TEST_CASE("geodesic mean is limited to plain RADAR") {
  Scenario s = gen_drifting_mean(10, 2, 0.1, 1);
  RunOptions o;
  o.algorithm = "radar_v";
  o.mean = MeanKind::Geodesic;
  CHECK_THROWS_AS(run_algorithm(s, o), DomainError);
  o.algorithm = "radar";
  CHECK_NOTHROW(run_algorithm(s, o));
  o.algorithm = "nonsense";
  CHECK_THROWS_AS(run_algorithm(s, o), DomainError);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_run_config("{"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"scenario": "drifting_mean"})"), DomainError);  // no T
  CHECK_THROWS_AS(parse_run_config(R"({"T": 0, "scenario": "drifting_mean"})"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"T": 5, "scenario": "nowhere"})"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"T": 5, "tuning_mode": "psychic", "scenario": "drifting_mean"})"),
                  DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"T": 5, "manifold": "spd_affine", "scenario": "drifting_mean"})"),
                  DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"T": 5, "scenario": {"kind": "adversarial_game", "n": 2}})"),
                  DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"T": 5, "algorithm": "radar_v",
                                       "scenario": {"kind": "adversarial_game", "n": 3}})"),
                  DomainError);
}

TEST_CASE("run outputs are deterministic and well formed") {
  const auto dir = std::filesystem::temp_directory_path() / "radar_harness_test";
  std::filesystem::remove_all(dir);
  RunConfig c = parse_run_config(R"({
    "algorithm": "radar_v", "T": 60, "seed": 11, "reps": 2,
    "scenario": {"kind": "alternating", "n": 3}
  })");
  const auto a = run_config(c, dir / "a");
  const auto b = run_config(c, dir / "b");
  REQUIRE(a.size() == 2);
  CHECK(a[1].csv.filename() == "trace_12.csv");
  for (int i = 0; i < 2; ++i) {
    CHECK(slurp(a[i].csv) == slurp(b[i].csv));
    CHECK(slurp(a[i].json) == slurp(b[i].json));
  }
  const std::string csv = slurp(a[0].csv);
  CHECK(csv.rfind("t,loss,comp_loss,cum_regret,P_t,V_t_proxy,F_t,bound_value,bound_ok\n", 0) == 0);
  const json j = json::parse(slurp(a[0].json));
  CHECK(j["schema"] == 1);
  CHECK(j["algorithm"] == "radar_v");
  CHECK(j["tuning_mode"] == "oracle");
  CHECK(j["scenario"]["T"] == 60);
  CHECK(j["constants"]["n_omd_experts"].get<int>() >= 1);
  CHECK(j["bound"]["violations"] == 0);
  CHECK(j["metrics"]["final_regret"].get<double>() == doctest::Approx(a[0].final_regret));
  std::filesystem::remove_all(dir);
}

TEST_CASE("adversarial game scenario reproduces the game value") {
  RunConfig c = parse_run_config(R"({
    "algorithm": "rogd", "T": 50,
    "scenario": {"kind": "adversarial_game", "n": 3, "budgets": 1.0, "D": 2.0}
  })");
  Scenario s = build_scenario(c, 0);
  const RunOutcome r = run(s, "rogd");
  // the optimal adversary forces at least the minimax value on any player
  CHECK(r.trace.back().cum_regret >= std::sqrt(50.0) - 1e-8);
}
