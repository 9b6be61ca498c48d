#include "radar/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <numeric>
#include <random>
#include <sstream>

#include "radar/convex_set.hpp"
#include "radar/game.hpp"
#include "radar/hedge.hpp"
#include "radar/losses.hpp"
#include "radar/means.hpp"
#include "radar/runner.hpp"
#include "radar/scenario.hpp"

namespace radar::suites {

namespace {

using Clock = std::chrono::steady_clock;

// Tracks the worst value of a quantity that must stay below a threshold.
struct Worst {
  std::string label;
  double value = 0.0;
  double limit = 0.0;
  int violations = 0;
  int checks = 0;
  void see(double v) {
    ++checks;
    value = std::max(value, v);
    if (!(v <= limit)) ++violations;
  }
  std::string str() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s worst %.3g (limit %.1g, %d/%d bad)", label.c_str(), value, limit, violations,
                  checks);
    return buf;
  }
};

CriterionResult finish(int id, const char* name, double limit, Clock::time_point t0, bool ok, std::string detail) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.time_limit = limit;
  r.passed = ok && (limit <= 0.0 || r.seconds < limit);
  r.detail = std::move(detail);
  if (limit > 0.0 && r.seconds >= limit) r.detail += "; over time limit";
  return r;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

double unit_uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

Eigen::VectorXd random_weights(int n, Rng& rng) {
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = 0.05 + unit_uniform(rng);
  return w / w.sum();
}

std::vector<Point> random_points(const Manifold& m, const Point& c, double r, int n, Rng& rng) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(m.random_point(c, r, rng));
  return out;
}

std::string spec_name(const ManifoldSpec& s) { return to_string(s.kind) + "(" + std::to_string(s.dim) + ")"; }

// Random gsc-convex losses on a manifold, with their evaluation domain.
std::vector<LossFunction> convex_losses(const std::shared_ptr<const Manifold>& m, const GeodesicBall& domain,
                                        Rng& rng) {
  std::vector<LossFunction> out;
  for (int k = 0; k < 3; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    out.push_back(
        squared_distance_loss(m, random_points(*m, domain.center(), domain.radius(), n, rng), random_weights(n, rng), domain));
  }
  if (m->kind() == ManifoldKind::DiagSpd) {
    Eigen::VectorXd d(m->dim());
    for (int i = 0; i < d.size(); ++i) d[i] = std::normal_distribution<double>()(rng);
    out.push_back(busemann_loss(m, (d / d.norm()).asDiagonal().toDenseMatrix(), 1.0 + unit_uniform(rng)));
  }
  if (m->kind() == ManifoldKind::Euclidean) {
    Eigen::MatrixXd g(m->dim(), 1);
    for (int i = 0; i < m->dim(); ++i) g(i, 0) = std::normal_distribution<double>()(rng);
    out.push_back(linear_loss(m, g));
  }
  return out;
}

}  // namespace

std::vector<ManifoldSpec> test_manifolds() {
  return {{ManifoldKind::Euclidean, 3},
          {ManifoldKind::PoincareBall, 3},
          {ManifoldKind::SpdAffine, 3},
          {ManifoldKind::SpdAffine, 5},
          {ManifoldKind::DiagSpd, 4}};
}

// ---------------------------------------------------------------- 1

CriterionResult geometry_properties(int cases) {
  const auto t0 = Clock::now();
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& spec : test_manifolds()) {
    const auto m = make_manifold(spec);
    const double tol = spec.kind == ManifoldKind::SpdAffine ? 1e-6 : 1e-8;
    Worst trip{"round-trip", 0, tol}, iso{"isometry", 0, 1e-8}, speed{"speed", 0, 1e-8};
    Rng rng(1000 + static_cast<int>(spec.kind) * 10 + spec.dim);
    const Point o = m->origin();
    for (int k = 0; k < cases; ++k) {
      const Point x = m->random_point(o, 1.5, rng);
      const Point y = m->random_point(o, 1.5, rng);
      const Tangent v = m->log(x, y);
      trip.see(m->dist(m->exp(x, v), y));
      const Tangent u = (0.1 + 2.0 * unit_uniform(rng)) * m->random_unit_tangent(x, rng);
      const Tangent back = m->log(x, m->exp(x, u));
      trip.see(m->norm(x, back - u));

      const Tangent a = m->random_unit_tangent(x, rng), b = m->random_unit_tangent(x, rng);
      const Tangent pa = m->transport(x, y, a), pb = m->transport(x, y, b);
      iso.see(std::abs(m->inner(y, pa, pb) - m->inner(x, a, b)));
      iso.see(std::abs(m->norm(y, pa) - 1.0));

      const double d = m->dist(x, y);
      const double s = unit_uniform(rng), t = unit_uniform(rng);
      const Point gs = m->geodesic(x, y, s), gt = m->geodesic(x, y, t);
      speed.see(std::abs(m->dist(x, gs) - s * d));
      speed.see(std::abs(m->dist(gs, gt) - std::abs(t - s) * d));
    }
    const bool good = !trip.violations && !iso.violations && !speed.violations;
    ok = ok && good;
    parts.push_back(spec_name(spec) + (good ? " ok" : ": " + trip.str() + ", " + iso.str() + ", " + speed.str()));
  }
  return finish(1, "geometry: exp/log round trip, transport isometry, constant-speed geodesics", 10.0, t0, ok,
                std::to_string(cases) + " cases per manifold; " + join(parts));
}

// ---------------------------------------------------------------- 2

CriterionResult comparison_laws(int cases) {
  const auto t0 = Clock::now();
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& spec : test_manifolds()) {
    const auto m = make_manifold(spec);
    Rng rng(2000 + static_cast<int>(spec.kind) * 10 + spec.dim);
    const double radius = 1.5;
    const double z = zeta(m->curvature(), 2.0 * radius);
    Worst upper{"cos1 excess", 0, 1e-8}, lower{"cos2 excess", 0, 1e-8};
    for (int k = 0; k < cases; ++k) {
      const Point o = m->origin();
      const Point x = m->random_point(o, radius, rng), y = m->random_point(o, radius, rng),
                  w = m->random_point(o, radius, rng);
      const Tangent lb = m->log(x, y), lc = m->log(x, w);
      const double b = m->norm(x, lb), c = m->norm(x, lc), a = m->dist(y, w);
      if (b < 1e-12 || c < 1e-12) continue;
      const double bc_cos = m->inner(x, lb, lc);  // b c cos A
      upper.see(a * a - (z * b * b + c * c - 2.0 * bc_cos));
      lower.see((b * b + c * c - 2.0 * bc_cos) - a * a);
    }
    const bool good = !upper.violations && !lower.violations;
    ok = ok && good;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s zeta=%.4g %s", spec_name(spec).c_str(), z, good ? "ok" : "");
    parts.push_back(buf + (good ? std::string() : upper.str() + ", " + lower.str()));
  }
  return finish(2, "comparison laws: zeta-weighted upper and flat lower cosine inequalities", 10.0, t0, ok,
                std::to_string(cases) + " triangles per manifold in a ball of diameter 3; " + join(parts));
}

// ---------------------------------------------------------------- 3

CriterionResult loss_properties(int cases) {
  const auto t0 = Clock::now();
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& spec : test_manifolds()) {
    const auto m = make_manifold(spec);
    Rng rng(3000 + static_cast<int>(spec.kind) * 10 + spec.dim);
    const GeodesicBall domain(m, m->origin(), 1.2);
    Worst fd{"fd rel", 0, 1e-5}, cvx{"convexity", 0, 1e-9}, smooth{"smoothness", 0, 1e-9},
        selfb{"self-bounding", 0, 1e-9};
    const int per_family = std::max(1, cases / 10);
    int done = 0;
    while (done < cases) {
      for (const LossFunction& f : convex_losses(m, domain, rng)) {
        for (int k = 0; k < per_family && done < cases; ++k, ++done) {
          const Point x = m->random_point(domain.center(), domain.radius(), rng);
          const Point y = m->random_point(domain.center(), domain.radius(), rng);
          const Tangent g = f.grad(x);
          const double gn = m->norm(x, g);
          const Tangent v = m->random_unit_tangent(x, rng);
          fd.see(finite_difference_check(*m, f, x, v) / std::max(1.0, gn));
          const double lin = f.value(x) + m->inner(x, g, m->log(x, y));
          cvx.see((lin - f.value(y)) / (1.0 + std::abs(f.value(y))));
          if (f.L) {
            const double d = m->dist(x, y);
            smooth.see((f.value(y) - lin - 0.5 * *f.L * d * d) / (1.0 + std::abs(f.value(y))));
            if (f.nonnegative) selfb.see((gn * gn - 2.0 * *f.L * f.value(x)) / (1.0 + gn * gn));
          }
        }
      }
    }
    const bool good = !fd.violations && !cvx.violations && !smooth.violations && !selfb.violations;
    ok = ok && good;
    parts.push_back(spec_name(spec) + (good ? " ok" : ": " + fd.str() + ", " + cvx.str() + ", " + smooth.str() +
                                                          ", " + selfb.str()));
  }
  return finish(3, "losses: finite-difference gradients, convexity, smoothness, self-bounding", 30.0, t0, ok,
                std::to_string(cases) + " pairs per manifold; " + join(parts));
}

// ---------------------------------------------------------------- 4

CriterionResult mean_properties(int cases) {
  const auto t0 = Clock::now();
  constexpr double tol = 1e-9;
  std::vector<std::string> parts;
  bool ok = true;
  const auto specs = test_manifolds();
  const int per = std::max(1, cases / static_cast<int>(specs.size()));
  for (const auto& spec : specs) {
    const auto m = make_manifold(spec);
    Rng rng(4000 + static_cast<int>(spec.kind) * 10 + spec.dim);
    const double radius = 1.0;
    const double D = 2.0 * radius;
    const GeodesicBall domain(m, m->origin(), radius);
    Worst stat{"residual", 0, tol}, two{"N=2 gap", 0, 1e-8}, jensen{"Jensen", 0, 1e-9}, sens{"sensitivity", 0, 0};
    for (int k = 0; k < per * 2; ++k) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto xs = random_points(*m, domain.center(), radius, n, rng);
      const auto ys = random_points(*m, domain.center(), radius, n, rng);
      const Eigen::VectorXd a = random_weights(n, rng), b = random_weights(n, rng);
      const MeanResult fx = frechet_mean_detail(*m, xs, a, tol);
      stat.see(fx.residual);
      const Point gx = geodesic_mean(*m, xs, a);

      for (const LossFunction& f : convex_losses(m, domain, rng)) {
        double avg = 0.0;
        for (int i = 0; i < n; ++i) avg += a[i] * f.value(xs[i]);
        const double scale = 1.0 + std::abs(avg);
        jensen.see((f.value(fx.x) - avg) / scale);
        jensen.see((f.value(gx) - avg) / scale);
      }

      const Point fy = frechet_mean(*m, ys, b, tol);
      double rhs = 10.0 * tol;
      for (int i = 0; i < n; ++i) rhs += a[i] * m->dist(xs[i], ys[i]) + D * std::abs(a[i] - b[i]);
      sens.see(m->dist(fx.x, fy) - rhs);

      const Eigen::Vector2d w2 = random_weights(2, rng);
      const std::vector<Point> pair{xs[0], xs[1]};
      two.see(m->dist(frechet_mean(*m, pair, w2, 1e-12), m->geodesic(xs[0], xs[1], w2[1])));
      two.see(m->dist(geodesic_mean(*m, pair, w2), m->geodesic(xs[0], xs[1], w2[1])));
    }
    const bool good = !stat.violations && !two.violations && !jensen.violations && !sens.violations;
    ok = ok && good;
    parts.push_back(spec_name(spec) + (good ? " ok" : ": " + stat.str() + ", " + two.str() + ", " + jensen.str() +
                                                          ", " + sens.str()));
  }
  return finish(4, "means: stationarity, two-point agreement, Jensen, sensitivity", 30.0, t0, ok,
                std::to_string(per * 2) + " instances per manifold; " + join(parts));
}

// ---------------------------------------------------------------- 5

double optimistic_hedge_slack(int N, int T, double beta, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int style = static_cast<int>(seed % 3);
  Eigen::VectorXd cum = Eigen::VectorXd::Zero(N), prev_w, prev_l = Eigen::VectorXd::Zero(N);
  double mixed = 0.0, pred = 0.0, moves = 0.0;
  for (int t = 1; t <= T; ++t) {
    Eigen::VectorXd l(N), m(N);
    for (int i = 0; i < N; ++i) l[i] = u(rng);
    if (style == 1) l[t % N] -= 0.5;  // rotating favourite
    for (int i = 0; i < N; ++i) {
      switch (style) {
        case 0: m[i] = u(rng); break;                     // unrelated hint
        case 1: m[i] = prev_l[i]; break;                  // last round's loss
        default: m[i] = l[i] + 0.1 * u(rng); break;       // near-perfect hint
      }
    }
    const Eigen::VectorXd w = optimistic_hedge_weights(cum, m, beta);
    mixed += w.dot(l);
    pred += std::pow((l - m).lpNorm<Eigen::Infinity>(), 2);
    if (t >= 2) moves += std::pow((w - prev_w).lpNorm<1>(), 2);
    cum += l;
    prev_w = w;
    prev_l = l;
  }
  const double rhs = (2.0 + std::log(double(N))) / beta + beta * pred - moves / (4.0 * beta);
  return rhs - (mixed - cum.minCoeff());
}

CriterionResult pathwise_bounds() {
  const auto t0 = Clock::now();
  std::vector<std::string> parts;
  bool ok = true;

  // Scenarios shared by the single-learner and RADAR checks.
  std::vector<std::function<Scenario(std::uint64_t)>> makers = {
      [](std::uint64_t s) { return gen_drifting_mean(300, 2, 0.1, s); },
      [](std::uint64_t s) { return gen_drifting_mean(200, 3, 0.2, s); },
      [](std::uint64_t s) { return gen_alternating(300, 4, 0.5, 0.1, s); },
      [](std::uint64_t s) {
        auto m = make_manifold({ManifoldKind::SpdAffine, 3});
        Rng rng(s);
        CustomSpec c{.manifold = m, .set = GeodesicBall(m, m->origin(), 1.0)};
        c.T = 200;
        c.delta = 0.1;
        c.seed = s;
        for (int t = 0; t < c.T; ++t) {
          CustomRound r;
          r.anchors = random_points(*m, m->origin(), 1.0, 3, rng);
          r.weights = random_weights(3, rng);
          c.rounds.push_back(r);
        }
        return gen_custom(c);
      },
      [](std::uint64_t s) {
        auto m = make_manifold({ManifoldKind::Euclidean, 2});
        Rng rng(s);
        CustomSpec c{.manifold = m, .set = GeodesicBall(m, m->origin(), 1.0)};
        c.T = 250;
        c.delta = 0.1;
        c.seed = s;
        c.comparator = "piecewise_constant";
        c.segments = 5;
        for (int t = 0; t < c.T; ++t) {
          CustomRound r;
          Eigen::MatrixXd p(2, 1);
          p << std::cos(t / 20.0), std::sin(t / 20.0);
          r.anchors = {m->point(p), m->random_point(m->origin(), 1.0, rng)};
          r.weights = Eigen::Vector2d(0.7, 0.3);
          c.rounds.push_back(r);
        }
        return gen_custom(c);
      },
      [](std::uint64_t s) { return gen_adversarial_game(3, 200, std::vector<double>(200, 1.0), 2.0, s); },
  };

  int rogd_runs = 0, rogd_bad = 0, omd_runs = 0, omd_bad = 0, radar_runs = 0, radar_bad = 0;
  for (std::size_t k = 0; k < makers.size(); ++k) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      Scenario s = makers[k](seed);
      const double D = s.set.diameter();
      const auto grid = stepsize_grid_radar(D, s.G, zeta(s.manifold->curvature(), D), s.T);
      for (double eta : {grid.etas.front(), grid.etas.back()}) {
        const RunOutcome r = run_algorithm(s, {.algorithm = "rogd", .eta = eta});
        ++rogd_runs;
        rogd_bad += std::any_of(r.trace.begin(), r.trace.end(), [](const TraceRow& x) { return !x.bound_ok; });
      }
      if (s.L > 0.0) {
        const double zv = zeta(s.manifold->curvature(), D + 2.0 * s.delta * s.G);
        const auto vg = stepsize_grid_radarv(D, s.G, s.L, zv, s.delta, s.T);
        for (double eta : {vg.etas.front(), vg.etas.back()}) {
          const RunOutcome r = run_algorithm(s, {.algorithm = "omd", .eta = eta});
          ++omd_runs;
          omd_bad += std::any_of(r.trace.begin(), r.trace.end(), [](const TraceRow& x) { return !x.bound_ok; });
        }
      }
      // Hedge-over-experts bound for every expert at every prefix.
      const RunOutcome r = run_algorithm(s, {.algorithm = "radar"});
      ++radar_runs;
      const Eigen::VectorXd w1 = radar_initial_weights(static_cast<int>(r.etas.size()));
      bool good = true;
      for (int t = 1; t <= s.T; ++t) {
        const MetaLedger& led = r.records[t - 1].ledger;
        const double beta = led.beta;
        for (int i = 0; i < w1.size(); ++i) {
          // beta is tuned for T; at a prefix t the Hoeffding form still holds
          const double bound = std::log(1.0 / w1[i]) / beta + beta * s.G * s.G * D * D * t / 8.0;
          if (led.cum_loss - led.expert_cum_loss[i] > bound + 1e-8 * (1.0 + bound)) good = false;
        }
      }
      radar_bad += !good;
    }
  }
  ok = ok && !rogd_bad && !omd_bad && !radar_bad;
  parts.push_back("R-OGD " + std::to_string(rogd_runs - rogd_bad) + "/" + std::to_string(rogd_runs));
  parts.push_back("OMD " + std::to_string(omd_runs - omd_bad) + "/" + std::to_string(omd_runs));
  parts.push_back("RADAR experts " + std::to_string(radar_runs - radar_bad) + "/" + std::to_string(radar_runs));

  int hedge_bad = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  Rng rng(5000);
  for (int k = 0; k < 200; ++k) {
    const int N = 1 + static_cast<int>(rng() % 8);
    const int T = 1 + static_cast<int>(rng() % 500);
    const double beta = std::exp(std::uniform_real_distribution<double>(std::log(0.01), std::log(2.0))(rng));
    const double slack = optimistic_hedge_slack(N, T, beta, 5000 + k);
    min_slack = std::min(min_slack, slack);
    hedge_bad += slack < -1e-9;
  }
  ok = ok && !hedge_bad;
  char buf[128];
  std::snprintf(buf, sizeof buf, "optimistic Hedge %d/200 (min slack %.3g)", 200 - hedge_bad, min_slack);
  parts.push_back(buf);
  return finish(5, "pathwise bounds: R-OGD, RADAR experts, OMD, optimistic Hedge", 120.0, t0, ok, join(parts));
}

// ---------------------------------------------------------------- 6

CriterionResult game_values() {
  const auto t0 = Clock::now();
  using namespace radar::game;
  std::vector<std::string> parts;
  bool ok = true;
  Rng rng(6000);
  std::vector<GameConfig> configs;
  const int ns[] = {3, 5};
  const int Ts[] = {10, 100, 1000};
  for (int k = 0; k < 20; ++k) {
    GameConfig c;
    c.n = ns[k % 2];
    c.T = Ts[(k / 2) % 3];
    c.D = 0.5 + 3.0 * unit_uniform(rng);
    for (int t = 0; t < c.T; ++t) c.budgets.push_back(k % 4 == 0 ? 1.0 : 0.1 + 2.0 * unit_uniform(rng));
    configs.push_back(c);
  }
  configs[0] = GameConfig::constant(3, 100, 1.0, 2.0);  // value exactly 10

  double opt_gap = 0.0, adv_margin = std::numeric_limits<double>::infinity(),
         ply_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : configs) {
    const GameResult r = play_game(c, optimal_player(), optimal_adversary());
    opt_gap = std::max(opt_gap, std::abs(r.regret - r.value));
  }
  ok = ok && opt_gap <= 1e-9;

  const char* players[] = {"zero", "follow_leader", "fixed_axis", "random", "half_leader"};
  for (const auto& c : configs)
    for (const char* p : players) {
      const GameResult r = play_game(c, baseline_player(p, 7), optimal_adversary());
      adv_margin = std::min(adv_margin, r.regret - (r.value - 1e-9));
    }
  ok = ok && adv_margin >= 0.0;

  for (int k = 0; k < 100; ++k) {
    const GameConfig& c = configs[k % configs.size()];
    const GameResult r = play_game(c, optimal_player(), random_adversary(6100 + k, (k % 5) * 0.25));
    ply_margin = std::min(ply_margin, (r.value + 1e-9) - r.regret);
  }
  ok = ok && ply_margin >= 0.0;

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "optimal vs optimal max |regret - value| %.2g over 20 configs; optimal adversary vs 5 baselines "
                "min regret - value %.3g; optimal player vs 100 random adversaries min value - regret %.3g",
                opt_gap, adv_margin - 1e-9, ply_margin - 1e-9);
  parts.push_back(buf);
  return finish(6, "game: closed-form minimax value and both one-sided guarantees", 60.0, t0, ok, join(parts));
}

// ---------------------------------------------------------------- 7-9

namespace {

struct Confinement {
  long plays = 0, plays_ok = 0, anchors = 0, anchors_ok = 0;
  void add(const RunOutcome& r) {
    for (const auto& rec : r.records) {
      ++plays;
      plays_ok += rec.play_confined;
      ++anchors;
      anchors_ok += rec.anchors_confined;
    }
  }
};

Confinement& shared_tally() {
  static Confinement c;
  return c;
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

}  // namespace

CriterionResult sublinear_regret() {
  const auto t0 = Clock::now();
  const int Ts[] = {500, 1000, 2000};
  std::vector<double> means;
  int meta_bad = 0, runs = 0;
  for (int T : Ts) {
    std::vector<double> regrets;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Scenario s = gen_drifting_mean(T, 2, 0.1, seed);
      const RunOutcome r = run_algorithm(s, {.algorithm = "radar"});
      regrets.push_back(r.trace.back().cum_regret);
      ++runs;
      const MetaLedger& led = r.records.back().ledger;
      const double D = s.set.diameter();
      const Eigen::VectorXd w1 = radar_initial_weights(static_cast<int>(r.etas.size()));
      const double F = r.trace.back().F_t;
      bool good = true;
      for (int i = 0; i < w1.size(); ++i) {
        const double expert_regret = led.expert_cum_loss[i] - F;
        const double meta = std::sqrt(s.G * s.G * D * D * T / 8.0) * (1.0 + std::log(1.0 / w1[i]));
        if (r.trace.back().cum_regret > expert_regret + meta + 1e-8 * (1.0 + meta)) good = false;
      }
      meta_bad += !good;
    }
    means.push_back(mean_of(regrets));
  }
  const double r1 = means[1] / means[0], r2 = means[2] / means[1];
  const bool ok = r1 <= 1.5 && r2 <= 1.5 && meta_bad == 0;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "mean regret T=500 %.4g, T=1000 %.4g, T=2000 %.4g; ratios %.3f, %.3f (limit 1.5); "
                "regret <= expert regret + meta bound on %d/%d runs",
                means[0], means[1], means[2], r1, r2, runs - meta_bad, runs);
  return finish(7, "sublinearity: RADAR on drifting mean", 0.0, t0, ok, buf);
}

CriterionResult best_of_both_worlds() {
  const auto t0 = Clock::now();
  const int T = 2000;
  const char* algs[] = {"radar_v", "radar_s", "radar_b"};
  double mean_regret[2][3];
  for (int sc = 0; sc < 2; ++sc) {
    for (int a = 0; a < 3; ++a) {
      std::vector<double> regrets;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Scenario s = sc == 0 ? gen_drifting_mean(T, 2, 0.1, seed) : gen_alternating(T, 4, 0.5, 0.1, seed);
        const RunOutcome r = run_algorithm(s, {.algorithm = algs[a]});
        regrets.push_back(r.trace.back().cum_regret);
        if (a != 1) shared_tally().add(r);
      }
      mean_regret[sc][a] = mean_of(regrets);
    }
  }
  const double* d = mean_regret[0];
  const double* al = mean_regret[1];
  const bool v_wins_drift = d[0] < d[1];
  const bool s_wins_alt = al[1] < al[0];
  const bool b_drift = d[2] <= 1.3 * std::min(d[0], d[1]);
  const bool b_alt = al[2] <= 1.3 * std::min(al[0], al[1]);
  char buf[400];
  std::snprintf(buf, sizeof buf,
                "drifting_mean v=%.4g s=%.4g b=%.4g; alternating v=%.4g s=%.4g b=%.4g; "
                "v<s on drifting %s, s<v on alternating %s, b within 1.3x %s/%s",
                d[0], d[1], d[2], al[0], al[1], al[2], v_wins_drift ? "yes" : "NO", s_wins_alt ? "yes" : "NO",
                b_drift ? "yes" : "NO", b_alt ? "yes" : "NO");
  return finish(8, "best of both worlds: RADAR_v / RADAR_s / RADAR_b ordering", 600.0, t0,
                v_wins_drift && s_wins_alt && b_drift && b_alt, buf);
}

CriterionResult improper_confinement() {
  const auto t0 = Clock::now();
  Confinement c = shared_tally();
  // Extra runs: adaptive rates, larger margin, curved SPD decision set.
  for (const char* alg : {"radar_v", "radar_b"}) {
    for (const auto mode : {TuningMode::Oracle, TuningMode::Adaptive}) {
      for (std::uint64_t seed = 0; seed < 2; ++seed) {
        Scenario a = gen_drifting_mean(400, 3, 0.3, seed);
        c.add(run_algorithm(a, {.algorithm = alg, .mode = mode}));
        Scenario b = gen_alternating(400, 3, 0.5, 0.2, seed);
        c.add(run_algorithm(b, {.algorithm = alg, .mode = mode}));
        auto m = make_manifold({ManifoldKind::SpdAffine, 3});
        Rng rng(9000 + seed);
        CustomSpec cs{.manifold = m, .set = GeodesicBall(m, m->origin(), 0.8)};
        cs.T = 200;
        cs.delta = 0.25;
        cs.seed = seed;
        for (int t = 0; t < cs.T; ++t) {
          CustomRound r;
          r.anchors = random_points(*m, m->origin(), 1.5, 2, rng);
          r.weights = random_weights(2, rng);
          cs.rounds.push_back(r);
        }
        Scenario sp = gen_custom(cs);
        c.add(run_algorithm(sp, {.algorithm = alg, .mode = mode}));
      }
    }
  }
  const bool ok = c.plays > 0 && c.plays == c.plays_ok && c.anchors == c.anchors_ok;
  char buf[256];
  std::snprintf(buf, sizeof buf, "plays in N_{delta G}: %ld/%ld; OMD anchor rounds in N: %ld/%ld", c.plays_ok, c.plays,
                c.anchors_ok, c.anchors);
  return finish(9, "improper learning: plays and OMD anchors stay confined", 0.0, t0, ok, buf);
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
  std::vector<CriterionResult> out;
  const bool all = suite == "all";
  if (all || suite == "geometry") {
    out.push_back(geometry_properties());
    out.push_back(comparison_laws());
    out.push_back(loss_properties());
    out.push_back(mean_properties());
  }
  if (all || suite == "bounds") out.push_back(pathwise_bounds());
  if (all || suite == "game") out.push_back(game_values());
  if (all || suite == "scenarios") {
    out.push_back(sublinear_regret());
    out.push_back(best_of_both_worlds());
    out.push_back(improper_confinement());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "' (geometry, bounds, game, scenarios, all)");
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] criterion %d (%.2fs): ", r.passed ? "PASS" : "FAIL", r.id, r.seconds);
  return head + r.name + " -- " + r.detail;
}

}  // namespace radar::suites
