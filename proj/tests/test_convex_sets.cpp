#include <doctest.h>

#include <cmath>

#include "radar/convex_set.hpp"
#include "radar/errors.hpp"

using namespace radar;

namespace {
Eigen::MatrixXd col(double a, double b) {
  Eigen::MatrixXd c(2, 1);
  c << a, b;
  return c;
}
}  // namespace

TEST_CASE("euclidean ball membership and projection") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const GeodesicBall ball(m, m->origin(), 1.0);
  CHECK(ball.contains(m->point(col(0.5, 0))));
  CHECK(ball.contains(m->point(col(1.0, 0))));  // boundary counts
  const Point p = ball.project(m->point(col(2, 0)));
  CHECK(p.coords(0, 0) == doctest::Approx(1.0));
  CHECK(p.coords(1, 0) == doctest::Approx(0.0));
  const Point inside = m->point(col(0.3, -0.2));
  CHECK(same_point(ball.project(inside), inside));
  CHECK(ball.diameter() == 2.0);
}

TEST_CASE("poincare ball membership and projection") {
  auto m = make_manifold({ManifoldKind::PoincareBall, 2});
  const GeodesicBall ball(m, m->origin(), 1.0);
  CHECK_FALSE(ball.contains(m->point(col(0.9, 0))));
  CHECK(m->dist(m->origin(), m->point(col(0.9, 0))) == doctest::Approx(2.944).epsilon(1e-3));
  const Point far = m->point(col(std::tanh(1.0), 0));
  CHECK(m->dist(m->origin(), far) == doctest::Approx(2.0));
  const Point p = ball.project(far);
  CHECK(p.coords.norm() == doctest::Approx(0.462117).epsilon(1e-6));
  CHECK(m->dist(m->origin(), p) == doctest::Approx(1.0));
}

TEST_CASE("enlarged sets") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const GeodesicBall ball(m, m->origin(), 1.0);
  const EnlargedSet same = enlarge(ball, 0.0);
  const EnlargedSet wide = enlarge(ball, 0.5);
  const Point q = m->point(col(1.4, 0));
  CHECK_FALSE(same.contains(q));
  CHECK(wide.contains(q));
  CHECK(wide.diameter() == doctest::Approx(3.0));
  CHECK_THROWS_AS(enlarge(ball, -0.1), DomainError);
}

TEST_CASE("projection properties on curved spaces") {
  for (auto kind : {ManifoldKind::PoincareBall, ManifoldKind::SpdAffine, ManifoldKind::DiagSpd}) {
    auto m = make_manifold({kind, 3});
    Rng rng(21);
    const Point c = m->random_point(m->origin(), 0.5, rng);
    const GeodesicBall ball(m, c, 0.8);
    for (int k = 0; k < 100; ++k) {
      const Point x = m->random_point(c, 2.5, rng), y = m->random_point(c, 2.5, rng);
      const Point px = ball.project(x), py = ball.project(y);
      CHECK(ball.contains(px));
      CHECK(same_point(ball.project(px), px, 0.0));  // idempotent
      CHECK(m->dist(px, py) <= m->dist(x, y) + 1e-10);
      const Point z = m->random_point(c, 0.8, rng);
      if (m->dist(px, x) > 1e-9) CHECK(m->inner(px, m->log(px, x), m->log(px, z)) <= 1e-8);
      CHECK(m->dist(px, z) <= m->dist(x, z) + 1e-10);
    }
  }
}
