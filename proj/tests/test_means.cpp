#include <doctest.h>

#include "radar/errors.hpp"
#include "radar/means.hpp"

using namespace radar;

namespace {
Eigen::MatrixXd col(double a, double b) {
  Eigen::MatrixXd c(2, 1);
  c << a, b;
  return c;
}
}  // namespace

TEST_CASE("flat means are arithmetic means") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const std::vector<Point> two{m->point(col(0, 0)), m->point(col(2, 0))};
  const Eigen::Vector2d half(0.5, 0.5);
  CHECK(m->dist(frechet_mean(*m, two, half), m->point(col(1, 0))) < 1e-12);
  CHECK(m->dist(geodesic_mean(*m, two, half), m->point(col(1, 0))) < 1e-12);
  const std::vector<Point> three{m->point(col(0, 0)), m->point(col(3, 0)), m->point(col(0, 3))};
  const Eigen::Vector3d third = Eigen::Vector3d::Constant(1.0 / 3.0);
  CHECK(m->dist(geodesic_mean(*m, three, third), m->point(col(1, 1))) < 1e-12);
  CHECK(m->dist(frechet_mean(*m, three, third), m->point(col(1, 1))) < 1e-9);
}

TEST_CASE("degenerate weights and single points") {
  auto m = make_manifold({ManifoldKind::PoincareBall, 2});
  const std::vector<Point> pts{m->point(col(0.1, 0.2)), m->point(col(-0.3, 0.1)), m->point(col(0.4, -0.4))};
  const Eigen::Vector3d onehot(0, 1, 0);
  CHECK(m->dist(frechet_mean(*m, pts, onehot), pts[1]) < 1e-12);
  const std::vector<Point> one{pts[2]};
  CHECK(m->dist(geodesic_mean(*m, one, Eigen::VectorXd::Ones(1)), pts[2]) < 1e-15);
}

TEST_CASE("symmetric poincare points average to the origin") {
  auto m = make_manifold({ManifoldKind::PoincareBall, 2});
  const std::vector<Point> pts{m->point(col(0.5, 0)), m->point(col(-0.5, 0))};
  CHECK(m->dist(frechet_mean(*m, pts, Eigen::Vector2d(0.5, 0.5)), m->origin()) < 1e-10);
}

TEST_CASE("stationarity and two-point geodesic agreement on SPD") {
  auto m = make_manifold({ManifoldKind::SpdAffine, 3});
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(m->random_point(m->origin(), 1.0, rng));
    Eigen::VectorXd w = Eigen::VectorXd::Random(5).cwiseAbs() + Eigen::VectorXd::Constant(5, 0.1);
    w /= w.sum();
    const MeanResult r = frechet_mean_detail(*m, pts, w);
    CHECK(r.residual <= 1e-9);
    CHECK(frechet_objective(*m, pts, w, r.x) <= frechet_objective(*m, pts, w, pts[0]));
    const std::vector<Point> two{pts[0], pts[1]};
    const Eigen::Vector2d w2(0.3, 0.7);
    CHECK(m->dist(frechet_mean(*m, two, w2, 1e-12), m->geodesic(pts[0], pts[1], 0.7)) < 1e-8);
  }
}

TEST_CASE("bad inputs") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const std::vector<Point> pts{m->origin(), m->point(col(1, 1))};
  CHECK_THROWS_AS(frechet_mean(*m, {}, Eigen::VectorXd()), DomainError);
  CHECK_THROWS_AS(frechet_mean(*m, pts, Eigen::Vector2d(0.5, 0.6)), DomainError);
  CHECK_THROWS_AS(geodesic_mean(*m, pts, Eigen::Vector2d(1.5, -0.5)), DomainError);
  CHECK_THROWS_AS(geodesic_mean(*m, pts, Eigen::Vector3d(0.2, 0.3, 0.5)), DomainError);
}
