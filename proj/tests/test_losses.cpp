#include <doctest.h>

#include <cmath>

#include "radar/errors.hpp"
#include "radar/losses.hpp"

using namespace radar;

TEST_CASE("squared distance loss values and gradients") {
  auto e = make_manifold({ManifoldKind::Euclidean, 2});
  Eigen::MatrixXd a(2, 1);
  a << 1, 0;
  const LossFunction f = squared_distance_loss(e, {e->point(a)}, Eigen::VectorXd::Ones(1), 2.0);
  CHECK(f.value(e->origin()) == doctest::Approx(1.0));
  const Tangent g = f.grad(e->origin());
  CHECK(g.coords(0, 0) == doctest::Approx(-2.0));
  CHECK(g.coords(1, 0) == doctest::Approx(0.0));
  CHECK(f.value(e->point(a)) == 0.0);
  CHECK(f.G == 4.0);
  CHECK(*f.L == 2.0);
  CHECK(f.nonnegative);

  auto p = make_manifold({ManifoldKind::PoincareBall, 2});
  Eigen::MatrixXd h(2, 1);
  h << 0.5, 0;
  const LossFunction fp = squared_distance_loss(p, {p->point(h)}, Eigen::VectorXd::Ones(1), 1.5);
  CHECK(fp.value(p->origin()) == doctest::Approx(1.206949).epsilon(1e-6));
  CHECK(*fp.L == doctest::Approx(2.0 * zeta(-1.0, 1.5)));
  CHECK_THROWS_AS(squared_distance_loss(p, {}, Eigen::VectorXd(), 1.0), DomainError);
}

TEST_CASE("finite differences agree with gradients") {
  auto lin_m = make_manifold({ManifoldKind::Euclidean, 3});
  Eigen::MatrixXd g(3, 1);
  g << 1, -2, 0.5;
  const LossFunction lin = linear_loss(lin_m, g);
  Rng rng(4);
  const Point x0 = lin_m->random_point(lin_m->origin(), 1.0, rng);
  CHECK(finite_difference_check(*lin_m, lin, x0, lin_m->random_unit_tangent(x0, rng)) < 1e-9);

  auto p = make_manifold({ManifoldKind::PoincareBall, 3});
  const GeodesicBall dom(p, p->origin(), 1.0);
  std::vector<Point> anchors;
  for (int i = 0; i < 3; ++i) anchors.push_back(p->random_point(p->origin(), 1.0, rng));
  const LossFunction f = squared_distance_loss(p, anchors, Eigen::Vector3d(0.2, 0.3, 0.5), dom);
  for (int k = 0; k < 30; ++k) {
    const Point x = p->random_point(p->origin(), 1.0, rng);
    CHECK(finite_difference_check(*p, f, x, p->random_unit_tangent(x, rng)) <= 1e-5 * (1.0 + f.G));
  }

  auto d = make_manifold({ManifoldKind::DiagSpd, 3});
  Eigen::MatrixXd X = Eigen::Vector3d(1, 2, -2).asDiagonal();
  X /= 3.0;
  const LossFunction b = busemann_loss(d, X, 1.7);
  for (int k = 0; k < 30; ++k) {
    const Point x = d->random_point(d->origin(), 2.0, rng);
    CHECK(finite_difference_check(*d, b, x, d->random_unit_tangent(x, rng)) <= 1e-5 * (1.0 + b.G));
  }
}

TEST_CASE("busemann loss matches the trace form and its gradient bound") {
  auto d = make_manifold({ManifoldKind::DiagSpd, 3});
  const Point id = d->origin();
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(3, 3);
  X(0, 0) = 1.0;
  const LossFunction b = busemann_loss(d, X, 2.0);
  CHECK(b.value(id) == doctest::Approx(0.0));
  const double s = 0.7;
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(3, 3);
  Y(0, 0) = s;
  CHECK(b.value(d->exp(id, d->tangent(id, Y))) == doctest::Approx(-2.0 * (X * Y).trace()));
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const Point x = d->random_point(id, 3.0, rng);
    CHECK(d->norm(x, b.grad(x)) <= 2.0 + 1e-8);
  }
  CHECK_THROWS_AS(busemann_loss(d, 2.0 * X, 1.0), DomainError);
}

TEST_CASE("self-bounding holds for squared distances") {
  auto m = make_manifold({ManifoldKind::SpdAffine, 3});
  Rng rng(12);
  const GeodesicBall dom(m, m->origin(), 1.0);
  std::vector<Point> anchors{m->random_point(m->origin(), 1.0, rng), m->random_point(m->origin(), 1.0, rng)};
  const LossFunction f = squared_distance_loss(m, anchors, Eigen::Vector2d(0.4, 0.6), dom);
  for (int k = 0; k < 100; ++k) {
    const Point x = m->random_point(m->origin(), 1.0, rng);
    const double gn = m->norm(x, f.grad(x));
    CHECK(gn * gn <= 2.0 * *f.L * f.value(x) + 1e-9);
    CHECK(gn <= f.G + 1e-9);
  }
}
