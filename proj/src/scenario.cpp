#include "radar/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "radar/errors.hpp"
#include "radar/means.hpp"

namespace radar {

SquaredDistanceConstants squared_distance_constants(const Manifold& m, double radius, double anchor_reach,
                                                    double delta) {
  if (!(delta >= 0.0) || delta >= 0.5) throw DomainError("improper margin delta must lie in [0, 1/2)");
  const double G = 2.0 * (radius + anchor_reach) / (1.0 - 2.0 * delta);
  const double d_eval = 0.5 * G;
  return {G, 2.0 * zeta(m.curvature(), d_eval), d_eval};
}

namespace {

Point poincare_axis(const Manifold& m, int i, double r) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(m.dim(), 1);
  c(i, 0) = r;
  return m.point(c);
}

// Fills the oblivious-scenario plumbing around a pre-generated sequence.
void attach_fixed(Scenario& s, LossSequence losses) {
  auto seq = std::make_shared<const LossSequence>(std::move(losses));
  s.fixed_losses = seq;
  s.next_loss = [seq](int t, const Point&) { return (*seq)[t - 1]; };
  s.reset = [] {};
}

double max_reach(const Manifold& m, const Point& center, const std::vector<Point>& pts) {
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, m.dist(center, p));
  return r;
}

}  // namespace

Scenario gen_drifting_mean(int T, int dim, double delta, std::uint64_t seed) {
  if (T < 2 || dim < 2) throw DomainError("drifting mean needs T >= 2 and dim >= 2");
  auto m = make_manifold({ManifoldKind::PoincareBall, dim});
  const double radius = std::log(3.0);  // d(0, e_i / 2)
  Scenario s{.kind = "drifting_mean", .manifold = m, .set = GeodesicBall(m, m->origin(), radius)};
  s.T = T;
  s.delta = delta;
  s.seed = seed;
  const auto k = squared_distance_constants(*m, radius, radius, delta);
  s.G = k.G;
  s.L = k.L;
  s.d_eval = k.d_eval;

  const Eigen::VectorXd w = Eigen::VectorXd::Constant(2 * dim, 1.0 / (2 * dim));
  LossSequence losses;
  losses.reserve(T);
  for (int t = 1; t <= T; ++t) {
    const double r = double(t) / (2.0 * T);
    std::vector<Point> anchors;
    for (int i = 0; i < dim; ++i) anchors.push_back(poincare_axis(*m, i, r));
    for (int i = 0; i < dim; ++i) anchors.push_back(poincare_axis(*m, i, -r));
    losses.push_back(squared_distance_loss(m, std::move(anchors), w, s.d_eval));
  }
  attach_fixed(s, std::move(losses));

  const Point origin = m->origin();
  s.comparators = [origin](const LossSequence& ls) { return std::vector<Point>(ls.size(), origin); };
  s.comparator_rule = "fixed_point";
  Rng rng(seed);
  s.start = m->random_point(s.set.center(), s.set.radius(), rng);
  s.notes = "convex hull of +-e_i/2 replaced by the geodesic ball of radius ln 3 at the origin";
  return s;
}

Scenario gen_alternating(int T, int n, double alpha, double delta, std::uint64_t seed) {
  if (T < 2 || n < 1) throw DomainError("alternating scenario needs T >= 2 and n >= 1");
  if (!(alpha > 0.0)) throw DomainError("alternating scenario needs alpha > 0");
  auto m = make_manifold({ManifoldKind::PoincareBall, 2});
  const double rho = std::pow(double(T), -alpha);
  const double radius = std::log(3.0) + rho;
  Scenario s{.kind = "alternating", .manifold = m, .set = GeodesicBall(m, m->origin(), radius)};
  s.T = T;
  s.delta = delta;
  s.seed = seed;

  Rng rng(seed);
  const Point half_e1 = poincare_axis(*m, 0, 0.5);
  std::vector<Point> ys, neg;
  for (int i = 0; i < n; ++i) {
    ys.push_back(m->random_point(half_e1, rho, rng));
    neg.push_back(Point(-ys.back().coords));
  }
  const auto k = squared_distance_constants(*m, radius, max_reach(*m, m->origin(), ys), delta);
  s.G = k.G;
  s.L = k.L;
  s.d_eval = k.d_eval;

  const Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / n);
  const LossFunction odd = squared_distance_loss(m, ys, w, s.d_eval);
  const LossFunction even = squared_distance_loss(m, neg, w, s.d_eval);
  LossSequence losses;
  for (int t = 1; t <= T; ++t) losses.push_back(t % 2 == 1 ? odd : even);
  attach_fixed(s, std::move(losses));

  // x -> -x is an isometry of the ball, so the even-round minimizer is the
  // reflection of the odd one.
  const Point u_odd = frechet_mean(*m, ys, w, 1e-12);
  const Point u_even(-u_odd.coords);
  s.comparators = [u_odd, u_even](const LossSequence& ls) {
    std::vector<Point> u;
    for (std::size_t t = 1; t <= ls.size(); ++t) u.push_back(t % 2 == 1 ? u_odd : u_even);
    return u;
  };
  s.comparator_rule = "offline_minimizer_per_round";
  s.start = m->random_point(s.set.center(), s.set.radius(), rng);
  s.notes = "convex hull of the two anchor balls replaced by the geodesic ball of radius ln 3 + T^-alpha at the origin";
  return s;
}

Scenario gen_adversarial_game(int n, int T, std::vector<double> budgets, double D, std::uint64_t seed) {
  game::GameConfig cfg{n, T, std::move(budgets), D};
  cfg.validate();
  auto m = make_manifold({ManifoldKind::DiagSpd, n});
  Scenario s{.kind = "adversarial_game", .manifold = m, .set = GeodesicBall(m, m->origin(), 0.5 * D)};
  s.T = T;
  s.seed = seed;
  s.G = *std::max_element(cfg.budgets.begin(), cfg.budgets.end());
  s.L = 0.0;
  s.d_eval = 0.5 * D;

  auto state = std::make_shared<game::GameState>(n);
  const Point id = m->origin();
  s.reset = [state, n] { *state = game::GameState(n); };
  s.next_loss = [state, cfg, m, id](int t, const Point& played) {
    if (t != state->t) throw DomainError("adversarial game rounds must be requested in order");
    Eigen::VectorXd y = m->log(id, played).coords.diagonal() / (0.5 * cfg.D);
    if (y.norm() > 1.0) y /= y.norm();
    const double g = cfg.budgets[t - 1];
    Eigen::VectorXd x = game::adversary_move(*state, y, g);
    state->sum += x;
    state->X.push_back(x);
    state->Y.push_back(y);
    ++state->t;
    return busemann_loss(m, (x / g).asDiagonal().toDenseMatrix(), g);
  };
  s.comparators = [state, cfg, m, id](const LossSequence& ls) {
    const double total = state->sum.norm();
    Point best = id;
    if (total > 0.0)
      best = m->exp(id, m->tangent(id, ((0.5 * cfg.D / total) * state->sum).asDiagonal().toDenseMatrix()));
    return std::vector<Point>(ls.size(), best);
  };
  s.comparator_rule = "fixed_point";
  Rng rng(seed);
  s.start = m->random_point(s.set.center(), s.set.radius(), rng);
  return s;
}

Scenario gen_custom(const CustomSpec& spec) {
  const auto& m = spec.manifold;
  if (!m) throw DomainError("custom scenario needs a manifold");
  if (spec.T < 1) throw DomainError("custom scenario needs T >= 1");
  if (!spec.rounds.empty() && spec.rounds.size() != 1 && static_cast<int>(spec.rounds.size()) != spec.T)
    throw DomainError("custom scenario needs one round spec or exactly T of them");

  Scenario s{.kind = "custom", .manifold = m, .set = spec.set};
  s.T = spec.T;
  s.delta = spec.delta;
  s.seed = spec.seed;

  LossSequence losses;
  if (spec.rounds.empty()) {
    if (!(spec.delta >= 0.0) || spec.delta >= 0.5) throw DomainError("improper margin delta must lie in [0, 1/2)");
    s.G = 1.0;  // nothing to bound; any positive value keeps the grids defined
    s.L = 1.0;
    s.d_eval = spec.set.radius() * (1.0 + 2.0 * spec.delta);
    losses.assign(spec.T, zero_loss(m));
  } else {
    double reach = 0.0;
    for (const auto& r : spec.rounds) reach = std::max(reach, max_reach(*m, spec.set.center(), r.anchors));
    const auto k = squared_distance_constants(*m, spec.set.radius(), reach, spec.delta);
    s.G = k.G;
    s.L = k.L;
    s.d_eval = k.d_eval;
    std::vector<LossFunction> distinct;
    for (const auto& r : spec.rounds) distinct.push_back(squared_distance_loss(m, r.anchors, r.weights, s.d_eval));
    for (int t = 0; t < spec.T; ++t) losses.push_back(distinct[distinct.size() == 1 ? 0 : t]);
  }
  attach_fixed(s, std::move(losses));

  const GeodesicBall set = spec.set;
  const auto rounds = spec.rounds;
  const int T = spec.T;
  auto round_of = [rounds](int t) -> const CustomRound& { return rounds[rounds.size() == 1 ? 0 : t]; };

  s.comparator_rule = spec.comparator;
  if (spec.comparator == "fixed_point" || rounds.empty()) {
    const Point u = spec.fixed_point ? set.project(*spec.fixed_point) : set.center();
    s.comparators = [u](const LossSequence& ls) { return std::vector<Point>(ls.size(), u); };
  } else if (spec.comparator == "offline_minimizer_per_round") {
    s.comparators = [m, set, round_of](const LossSequence& ls) {
      std::vector<Point> u;
      for (std::size_t t = 0; t < ls.size(); ++t) {
        const auto& r = round_of(static_cast<int>(t));
        u.push_back(set.project(frechet_mean(*m, r.anchors, r.weights, 1e-12)));
      }
      return u;
    };
  } else if (spec.comparator == "piecewise_constant") {
    const int k = std::max(1, std::min(spec.segments, T));
    s.comparators = [m, set, round_of, k, T](const LossSequence&) {
      const int len = (T + k - 1) / k;
      std::vector<Point> u;
      for (int a = 0; a < T; a += len) {
        const int b = std::min(T, a + len);
        std::vector<Point> pts;
        std::vector<double> ws;
        for (int t = a; t < b; ++t) {
          const auto& r = round_of(t);
          for (std::size_t i = 0; i < r.anchors.size(); ++i) {
            pts.push_back(r.anchors[i]);
            ws.push_back(r.weights[i] / (b - a));
          }
        }
        Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(ws.data(), ws.size());
        w /= w.sum();
        const Point seg = set.project(frechet_mean(*m, pts, w, 1e-12));
        for (int t = a; t < b; ++t) u.push_back(seg);
      }
      return u;
    };
  } else {
    throw DomainError("unknown comparator rule '" + spec.comparator + "'");
  }

  Rng rng(spec.seed);
  s.start = m->random_point(set.center(), set.radius(), rng);
  return s;
}

ScenarioAudit audit_scenario(const Scenario& s, int points_per_round, int max_rounds) {
  ScenarioAudit a;
  if (!s.fixed_losses) return a;
  const auto& m = *s.manifold;
  const GeodesicBall domain(s.manifold, s.set.center(), s.set.radius() + s.delta * s.G);
  Rng rng(s.seed ^ 0x5eedULL);
  const int T = static_cast<int>(s.fixed_losses->size());
  const int rounds = std::min(T, max_rounds);
  for (int k = 0; k < rounds; ++k) {
    const int t = rounds == 1 ? 0 : static_cast<int>(std::lround(double(k) * (T - 1) / (rounds - 1)));
    const LossFunction& f = (*s.fixed_losses)[t];
    for (int j = 0; j < points_per_round; ++j) {
      const Point x = m.random_point(domain.center(), domain.radius(), rng);
      const Point y = m.random_point(domain.center(), domain.radius(), rng);
      const Tangent gx = f.grad(x);
      if (s.G > 0.0) a.max_grad_ratio = std::max(a.max_grad_ratio, m.norm(x, gx) / s.G);
      if (s.L > 0.0) {
        const double d = m.dist(x, y);
        if (d > 1e-9) {
          const Tangent diff = m.transport(y, x, f.grad(y)) - gx;
          a.max_smooth_ratio = std::max(a.max_smooth_ratio, m.norm(x, diff) / (s.L * d));
        }
      }
      ++a.samples;
    }
  }
  a.ok = a.max_grad_ratio <= 1.0 + 1e-9 && a.max_smooth_ratio <= 1.0 + 1e-3;
  return a;
}

}  // namespace radar
