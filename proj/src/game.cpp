#include "radar/game.hpp"

#include <cmath>
#include <random>

#include "radar/errors.hpp"
#include "radar/losses.hpp"

namespace radar::game {

GameConfig GameConfig::constant(int n, int T, double G, double D) {
  GameConfig c;
  c.n = n;
  c.T = T;
  c.budgets.assign(T, G);
  c.D = D;
  return c;
}

void GameConfig::validate() const {
  if (n <= 2) throw DomainError("the adversary needs dimension n > 2");
  if (T < 1) throw DomainError("game horizon must be positive");
  if (static_cast<int>(budgets.size()) != T) throw DomainError("need one gradient budget per round");
  for (double g : budgets)
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("budgets must be positive");
  if (!(D > 0.0)) throw DomainError("diameter must be positive");
}

Eigen::VectorXd adversary_move(const GameState& s, const Eigen::VectorXd& y, double budget) {
  const Eigen::Index n = s.sum.size();
  if (n <= 2) throw DomainError("the adversary needs dimension n > 2");
  if (y.size() != n) throw DomainError("player move has the wrong dimension");

  std::vector<Eigen::VectorXd> basis;
  for (const Eigen::VectorXd* c : {&y, &s.sum}) {
    Eigen::VectorXd v = *c;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double nv = v.norm();
    if (nv > 1e-12 * (1.0 + c->norm())) basis.push_back(v / nv);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, k);
    // two passes keep the residual orthogonal to working precision
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    const double nv = v.norm();
    if (nv > 1e-8) return budget * v / nv;
  }
  throw DomainError("no direction orthogonal to the constraints");
}

Eigen::VectorXd player_move(const GameState& s, const GameConfig& cfg) {
  if (s.t < 1 || s.t > cfg.T) throw DomainError("player asked to move outside the horizon");
  double rest = 0.0;
  for (int r = s.t; r <= cfg.T; ++r) rest += cfg.budgets[r - 1] * cfg.budgets[r - 1];
  return s.sum / std::sqrt(s.sum.squaredNorm() + rest);
}

double game_value(const GameConfig& cfg) {
  double q = 0.0;
  for (double g : cfg.budgets) q += g * g;
  return 0.5 * cfg.D * std::sqrt(q);
}

GameResult play_game(const GameConfig& cfg, const Player& player, const Adversary& adversary) {
  cfg.validate();
  GameResult r{0.0, 0.0, game_value(cfg), GameState(cfg.n)};
  GameState& s = r.state;
  for (s.t = 1; s.t <= cfg.T; ++s.t) {
    const double g = cfg.budgets[s.t - 1];
    Eigen::VectorXd y = player(s, cfg);
    if (y.size() != cfg.n || y.norm() > 1.0 + 1e-12) throw DomainError("player move leaves the unit ball");
    Eigen::VectorXd x = adversary(s, y, g);
    if (x.size() != cfg.n || x.norm() > g * (1.0 + 1e-12)) throw DomainError("adversary move exceeds its budget");
    r.linear_part -= x.dot(y);
    s.sum += x;
    s.X.push_back(std::move(x));
    s.Y.push_back(std::move(y));
  }
  s.t = cfg.T;
  r.regret = 0.5 * cfg.D * (r.linear_part + s.sum.norm());
  return r;
}

double lifted_regret(const GameConfig& cfg, const GameResult& r) {
  auto m = make_manifold({ManifoldKind::DiagSpd, cfg.n});
  const Point id = m->origin();
  const double half = 0.5 * cfg.D;
  auto lift = [&](const Eigen::VectorXd& y) {
    return m->exp(id, m->tangent(id, (half * y).asDiagonal().toDenseMatrix()));
  };
  const double total = r.state.sum.norm();
  const Point best = total > 0.0 ? lift(r.state.sum / total) : id;

  double regret = 0.0;
  for (std::size_t t = 0; t < r.state.X.size(); ++t) {
    const Eigen::VectorXd& x = r.state.X[t];
    const double g = x.norm();
    if (g == 0.0) continue;
    const LossFunction f = busemann_loss(m, (x / g).asDiagonal().toDenseMatrix(), g);
    regret += f.value(lift(r.state.Y[t])) - f.value(best);
  }
  return regret;
}

Player optimal_player() {
  return [](const GameState& s, const GameConfig& c) { return player_move(s, c); };
}

Adversary optimal_adversary() {
  return [](const GameState& s, const Eigen::VectorXd& y, double g) { return adversary_move(s, y, g); };
}

namespace {
Eigen::VectorXd random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  for (;;) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = n01(rng);
    const double nv = v.norm();
    if (nv > 1e-12) return v / nv;
  }
}
}  // namespace

Player baseline_player(const std::string& kind, std::uint64_t seed) {
  if (kind == "zero")
    return [](const GameState& s, const GameConfig&) { return Eigen::VectorXd::Zero(s.sum.size()).eval(); };
  if (kind == "follow_leader" || kind == "half_leader") {
    const double scale = kind == "half_leader" ? 0.5 : 1.0;
    return [scale](const GameState& s, const GameConfig&) -> Eigen::VectorXd {
      const double nv = s.sum.norm();
      if (nv > 0.0) return (scale / nv) * s.sum;
      return Eigen::VectorXd::Zero(s.sum.size());
    };
  }
  if (kind == "fixed_axis")
    return [](const GameState& s, const GameConfig&) { return Eigen::VectorXd::Unit(s.sum.size(), 0).eval(); };
  if (kind == "random") {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const GameState& s, const GameConfig&) {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const double r = u(*rng);
      return (r * random_unit(static_cast<int>(s.sum.size()), *rng)).eval();
    };
  }
  throw DomainError("unknown baseline player '" + kind + "'");
}

Adversary random_adversary(std::uint64_t seed, double skew) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng, skew](const GameState& s, const Eigen::VectorXd&, double g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = static_cast<int>(s.sum.size());
    Eigen::VectorXd d = random_unit(n, *rng) + skew * Eigen::VectorXd::Unit(n, 0);
    if (d.norm() < 1e-12) d = Eigen::VectorXd::Unit(n, 0);
    return (g * u(*rng) * d / d.norm()).eval();
  };
}

SegmentPlan dynamic_comparator_reduction(double tau, int T, double D, double G) {
  if (T < 1 || !(D > 0.0) || !(G > 0.0)) throw DomainError("segment plan needs T >= 1 and positive D, G");
  if (!(tau >= 0.0) || tau > T * D * (1.0 + 1e-12)) throw DomainError("path budget must lie in [0, T D]");
  SegmentPlan p;
  p.segments = std::max(1, static_cast<int>(std::ceil(tau / D - 1e-12)));
  p.segments = std::min(p.segments, T);
  p.length = (T + p.segments - 1) / p.segments;
  p.padded_T = p.segments * p.length;
  p.value = 0.5 * G * D * std::sqrt(double(p.padded_T) * p.segments);
  p.path_bound = (p.segments - 1) * D;
  for (int k = 0; k < p.segments; ++k) p.ranges.emplace_back(k * p.length + 1, (k + 1) * p.length);
  return p;
}

double play_segmented(const SegmentPlan& plan, int n, double G, double D) {
  double total = 0.0;
  for (int k = 0; k < plan.segments; ++k) {
    const auto cfg = GameConfig::constant(n, plan.length, G, D);
    total += play_game(cfg, optimal_player(), optimal_adversary()).regret;
  }
  return total;
}

}  // namespace radar::game
