#include <doctest.h>

#include <cmath>

#include "radar/errors.hpp"
#include "radar/hedge.hpp"
#include "radar/radar.hpp"
#include "radar/scenario.hpp"

using namespace radar;

namespace {

Eigen::MatrixXd col(std::initializer_list<double> v) {
  Eigen::MatrixXd c(v.size(), 1);
  int i = 0;
  for (double x : v) c(i++, 0) = x;
  return c;
}

LearnerSetup setup_for(const Scenario& s) {
  LearnerSetup ls{s.manifold, s.set};
  ls.T = s.T;
  ls.G = s.G;
  ls.L = s.L;
  ls.delta = s.delta;
  ls.start = s.start;
  return ls;
}

}  // namespace

TEST_CASE("rogd steps") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const GeodesicBall huge(m, m->origin(), 100.0), unit(m, m->origin(), 1.0);
  const Point o = m->origin();
  const Point a = rogd_step(*m, o, m->tangent(o, col({1, 0})), 0.1, huge);
  CHECK(a.coords(0, 0) == doctest::Approx(-0.1));
  CHECK(same_point(rogd_step(*m, o, m->tangent(o, col({0, 0})), 0.1, huge), o));
  const Point x = m->point(col({0.95, 0}));
  const Point b = rogd_step(*m, x, m->tangent(x, col({-1, 0})), 0.1, unit);
  CHECK(b.coords(0, 0) == doctest::Approx(1.0));
  CHECK(std::abs(b.coords(1, 0)) < 1e-15);
  CHECK_THROWS(rogd_step(*m, x, m->tangent(o, col({-1, 0})), 0.1, unit));
}

TEST_CASE("omd round in one dimension") {
  auto m = make_manifold({ManifoldKind::Euclidean, 1});
  const GeodesicBall set(m, m->origin(), 1.0);
  const Point y = m->origin();
  const auto unit_grad = [&](const Point& p) { return m->tangent(p, col({1})); };
  const OmdStep r = omd_round(*m, y, m->tangent(y, col({1})), unit_grad, 0.1, set, 10.0);
  CHECK(r.played.coords(0, 0) == doctest::Approx(-0.1));
  CHECK(r.y_next.coords(0, 0) == doctest::Approx(-0.1));

  const auto zero_grad = [&](const Point& p) { return m->tangent(p, col({0})); };
  const Point y0 = m->point(col({0.3}));
  const OmdStep z = omd_round(*m, y0, m->tangent(y0, col({0})), zero_grad, 0.1, set, 10.0);
  CHECK(same_point(z.played, y0));
  CHECK(same_point(z.y_next, y0));
}

TEST_CASE("omd expert matches textbook extragradient on linear losses") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const GeodesicBall set(m, m->origin(), 5.0);
  const double eta = 0.1, G = 3.0;
  OmdExpert e(m, set, eta, 1.0, G, 0.0, 1.0, m->origin());
  Eigen::Vector2d y = Eigen::Vector2d::Zero(), prev = Eigen::Vector2d::Zero();
  Rng rng(2);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 40; ++t) {
    Eigen::Vector2d g(n01(rng), n01(rng));
    g *= 2.0 / std::max(2.0, g.norm());
    const Eigen::Vector2d x = y - eta * prev;
    CHECK((e.propose().coords.col(0) - x).norm() < 1e-12);
    e.update(linear_loss(m, g));
    y = y - eta * g;  // linear losses: the gradient at x' equals g
    if (y.norm() > 5.0) y *= 5.0 / y.norm();
    CHECK((e.anchor().coords.col(0) - y).norm() < 1e-12);
    prev = g;
  }
  CHECK_THROWS_AS(OmdExpert(m, set, 0.6, 1.0, G, 0.0, 1.0, m->origin()), DomainError);
}

TEST_CASE("hedge arithmetic") {
  const Eigen::Vector2d half(0.5, 0.5);
  const Eigen::VectorXd w = hedge_update(half, Eigen::Vector2d(0, 1), 1.0);
  CHECK(w[0] == doctest::Approx(0.731059).epsilon(1e-6));
  CHECK(w[1] == doctest::Approx(0.268941).epsilon(1e-6));
  CHECK((hedge_update(half, Eigen::Vector2d(3, 3), 1.0) - half).norm() < 1e-15);
  const Eigen::VectorXd o = optimistic_hedge_weights(Eigen::Vector2d(0, 0), Eigen::Vector2d(0, 1), 1.0);
  CHECK((o - w).norm() < 1e-12);
  const Eigen::VectorXd shifted = optimistic_hedge_weights(Eigen::Vector2d(500, 500), Eigen::Vector2d(0, 1), 1.0);
  CHECK((shifted - w).norm() < 1e-12);
  const Eigen::VectorXd w1 = radar_initial_weights(3);
  CHECK(w1[0] == doctest::Approx(2.0 / 3.0));
  CHECK(w1[1] == doctest::Approx(2.0 / 9.0));
  CHECK(w1[2] == doctest::Approx(1.0 / 9.0));
  CHECK(radar_initial_weights(17).sum() == doctest::Approx(1.0));
}

TEST_CASE("step-size grids") {
  const StepSizeGrid g = stepsize_grid_radar(1.0, 1.0, 1.0, 4);
  REQUIRE(g.size() == 3);
  CHECK(g.etas[0] == doctest::Approx(0.5));
  CHECK(g.etas[1] == doctest::Approx(1.0));
  CHECK(g.etas[2] == doctest::Approx(2.0));
  CHECK(stepsize_grid_radar(1.0, 1.0, 1.0, 1).size() >= 1);
  for (int T = 2; T < 5000; T *= 2)
    CHECK(stepsize_grid_radar(2.0, 3.0, 1.5, 2 * T).size() <= stepsize_grid_radar(2.0, 3.0, 1.5, T).size() + 1);
  const double L = 4.0, z = 1.3;
  const StepSizeGrid s = stepsize_grid_radars(2.0, 5.0, L, z, 1000);
  CHECK(s.etas.back() <= 1.0 / (2.0 * z * L) + 1e-15);
  CHECK(s.etas.back() >= 0.5 / (2.0 * z * L));
  const StepSizeGrid v = stepsize_grid_radarv(2.0, 5.0, L, z, 0.1, 1000);
  CHECK(v.etas.back() <= omd_max_step(0.1, 5.0, L, z, 5.0) + 1e-15);
}

TEST_CASE("single-expert RADAR is R-OGD") {
  Scenario s = gen_drifting_mean(50, 2, 0.1, 1);
  LearnerSetup ls = setup_for(s);
  const double eta = 0.05;
  Radar meta(ls, {eta});
  RogdLearner plain(ls, eta);
  for (int t = 1; t <= s.T; ++t) {
    const Point a = meta.play(), b = plain.play();
    CHECK(a.coords == b.coords);
    const LossFunction f = s.next_loss(t, a);
    meta.observe(f);
    plain.observe(f);
    CHECK(meta.ledger()->weights[0] == 1.0);
  }
}

TEST_CASE("optimistic learners") {
  Scenario s = gen_alternating(60, 4, 0.5, 0.1, 3);
  LearnerSetup ls = setup_for(s);

  SUBCASE("gamma starts at one half") {
    RadarB b(ls);
    b.play();
    CHECK(b.ledger()->gamma == doctest::Approx(0.5));
  }

  SUBCASE("RADAR_b without OMD experts behaves like RADAR_s") {
    ls.beta = 0.02;
    RadarS rs(ls);
    RadarB rb(ls, 0, rs.grid().size());
    REQUIRE(rb.etas() == rs.etas());
    for (int t = 1; t <= s.T; ++t) {
      const Point a = rs.play(), b = rb.play();
      CHECK(s.manifold->dist(a, b) < 1e-12);
      const LossFunction f = s.next_loss(t, a);
      rs.observe(f);
      rb.observe(f);
      CHECK(rb.ledger()->gamma == 0.0);
    }
  }

  SUBCASE("first RADAR_v play uses uniform weights") {
    RadarV v(ls);
    v.play();
    const Eigen::VectorXd& w = v.ledger()->weights;
    CHECK((w.array() - 1.0 / w.size()).abs().maxCoeff() < 1e-15);
  }

  SUBCASE("adaptive RADAR_s rate is nonincreasing") {
    RadarS rs(ls);
    double last = 1e300;
    for (int t = 1; t <= s.T; ++t) {
      const LossFunction f = s.next_loss(t, rs.play());
      CHECK(rs.ledger()->beta <= last + 1e-15);
      last = rs.ledger()->beta;
      rs.observe(f);
    }
  }

  SUBCASE("smoothness is required") {
    ls.L = 0.0;
    CHECK_THROWS_AS(RadarV{ls}, DomainError);
    CHECK_THROWS_AS(RadarS{ls}, DomainError);
  }
}

TEST_CASE("learners stay in their sets") {
  Scenario s = gen_drifting_mean(80, 3, 0.2, 5);
  const LearnerSetup ls = setup_for(s);
  for (const char* name : {"rogd", "omd", "radar", "radar_v", "radar_s", "radar_b"}) {
    s.reset();
    auto l = make_learner(name, ls);
    const std::string n = name;
    const double margin = (n == "omd" || n == "radar_v" || n == "radar_b") ? s.delta * s.G : 0.0;
    for (int t = 1; t <= s.T; ++t) {
      const Point x = l->play();
      CHECK(s.manifold->dist(s.set.center(), x) <= s.set.radius() + margin + 1e-9);
      l->observe(s.next_loss(t, x));
    }
  }
}
