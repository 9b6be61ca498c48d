// Command-line front end: run experiments from JSON configs, run the
// acceptance suites, or play the minimax game directly.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "radar/config.hpp"
#include "radar/errors.hpp"
#include "radar/game.hpp"
#include "radar/suites.hpp"

namespace {

std::vector<double> parse_budgets(const std::string& text, int T) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.size() == 1) out.assign(T, out.front());
  if (static_cast<int>(out.size()) != T) throw radar::DomainError("need one budget or exactly T of them");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive dynamic-regret learners on Riemannian manifolds"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  auto* run = app.add_subcommand("run", "run an experiment config, writing CSV traces and JSON summaries");
  run->add_option("--config", config_path, "path to the JSON config")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--reps", reps, "override the repetition count");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run acceptance suites; exits nonzero on any failure");
  verify->add_option("--suite", suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"geometry", "bounds", "game", "scenarios", "all"}));

  int n = 3, T = 100;
  std::string budgets = "1";
  double D = 2.0;
  std::string player = "optimal", adversary = "optimal";
  auto* game = app.add_subcommand("game", "play the diagonal-SPD minimax game and print regret vs value");
  game->add_option("--n", n, "dimension (> 2)");
  game->add_option("--T", T, "horizon");
  game->add_option("--budget,--budgets", budgets, "gradient budget, or comma-separated list of T budgets");
  game->add_option("--D", D, "diameter");
  game->add_option("--player", player, "optimal, zero, follow_leader, fixed_axis, random, half_leader");
  game->add_option("--adversary", adversary, "optimal or random");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      std::ifstream in(config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      radar::RunConfig cfg = radar::parse_run_config(buf.str());
      if (seed) cfg.seed = *seed;
      if (reps) {
        if (*reps < 1) throw radar::DomainError("--reps must be at least 1");
        cfg.reps = *reps;
      }
      for (const auto& f : radar::run_config(cfg, out_dir))
        std::printf("%s  final regret %.6g  bounds %s\n", f.csv.string().c_str(), f.final_regret,
                    f.all_bounds_ok ? "ok" : "VIOLATED");
      return 0;
    }
    if (*verify) {
      bool ok = true;
      for (const auto& r : radar::suites::run_suite(suite)) {
        std::printf("%s\n", radar::suites::format_line(r).c_str());
        std::fflush(stdout);
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
    if (*game) {
      using namespace radar::game;
      GameConfig cfg{n, T, parse_budgets(budgets, T), D};
      const Player p = player == "optimal" ? optimal_player() : baseline_player(player, 0);
      Adversary a;
      if (adversary == "optimal") a = optimal_adversary();
      else if (adversary == "random") a = random_adversary(0);
      else throw radar::DomainError("adversary must be optimal or random");
      const GameResult r = play_game(cfg, p, a);
      std::printf("regret %.12g\nvalue  %.12g\nlifted %.12g\n", r.regret, r.value, lifted_regret(cfg, r));
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
