#include <doctest.h>

#include <cmath>

#include "radar/errors.hpp"
#include "radar/linalg.hpp"
#include "radar/manifold.hpp"

using namespace radar;

namespace {

Eigen::MatrixXd col(std::initializer_list<double> v) {
  Eigen::MatrixXd c(v.size(), 1);
  int i = 0;
  for (double x : v) c(i++, 0) = x;
  return c;
}

Eigen::MatrixXd diag(std::initializer_list<double> v) {
  Eigen::VectorXd d(v.size());
  int i = 0;
  for (double x : v) d[i++] = x;
  return d.asDiagonal().toDenseMatrix();
}

}  // namespace

TEST_CASE("euclidean exp, log and transport are flat") {
  auto m = make_manifold({ManifoldKind::Euclidean, 2});
  const Point x = m->point(col({1, 2}));
  const Point y = m->exp(x, m->tangent(x, col({0.5, -1})));
  CHECK(y.coords(0, 0) == doctest::Approx(1.5));
  CHECK(y.coords(1, 0) == doctest::Approx(1.0));
  const Point o = m->origin();
  const Tangent l = m->log(o, m->point(col({3, 4})));
  CHECK(l.coords(0, 0) == doctest::Approx(3));
  CHECK(l.coords(1, 0) == doctest::Approx(4));
  const Tangent v = m->tangent(x, col({0.3, -0.7}));
  CHECK((m->transport(x, y, v).coords - v.coords).norm() == doctest::Approx(0.0));
  CHECK(m->inner(x, v, v) == doctest::Approx(0.58));
}

TEST_CASE("poincare ball closed forms at the origin") {
  auto m = make_manifold({ManifoldKind::PoincareBall, 2});
  const Point o = m->origin();
  const Point half = m->point(col({0.5, 0}));
  const Point y = m->exp(o, m->tangent(o, col({std::atanh(0.5), 0})));
  CHECK(y.coords(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(y.coords(1, 0)) < 1e-14);
  const Tangent l = m->log(o, half);
  CHECK(l.coords(0, 0) == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK(m->dist(o, half) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(m->dist(o, half) == doctest::Approx(1.098612).epsilon(1e-6));
  const Tangent e1 = m->tangent(o, col({1, 0}));
  CHECK(m->inner(o, e1, e1) == doctest::Approx(4.0));
  // conformal factor away from the origin
  const Tangent e1h = m->tangent(half, col({1, 0}));
  CHECK(m->inner(half, e1h, e1h) == doctest::Approx(4.0 / (0.75 * 0.75)));
}

TEST_CASE("poincare transport reverses the log map") {
  auto m = make_manifold({ManifoldKind::PoincareBall, 3});
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const Point x = m->random_point(m->origin(), 2.0, rng), y = m->random_point(m->origin(), 2.0, rng);
    const Tangent moved = m->transport(x, y, m->log(x, y));
    const Tangent back = m->log(y, x);
    CHECK(m->norm(y, moved + back) < 1e-9);
  }
}

TEST_CASE("diagonal SPD closed forms") {
  auto m = make_manifold({ManifoldKind::DiagSpd, 2});
  const Point id = m->origin();
  const Point e = m->exp(id, m->tangent(id, diag({1, 1})));
  CHECK(e.coords(0, 0) == doctest::Approx(std::exp(1.0)));
  CHECK(e.coords(1, 1) == doctest::Approx(std::exp(1.0)));
  CHECK(m->dist(id, e) == doctest::Approx(std::sqrt(2.0)));
  const Point p = m->point(diag({2, 3})), q = m->point(diag({5, 0.5}));
  const Tangent a = m->tangent(p, diag({0.7, -1.2}));
  const Tangent moved = m->transport(p, q, a);
  CHECK(moved.coords(0, 0) == doctest::Approx(0.7 * 5 / 2));
  CHECK(moved.coords(1, 1) == doctest::Approx(-1.2 * 0.5 / 3));
  CHECK(m->inner(q, moved, moved) == doctest::Approx(m->inner(p, a, a)));
  CHECK(m->norm(q, m->transport(p, q, m->log(p, q)) + m->log(q, p)) < 1e-12);
}

TEST_CASE("SPD affine metric at the identity is the trace form") {
  auto m = make_manifold({ManifoldKind::SpdAffine, 3});
  const Point id = m->origin();
  Eigen::MatrixXd U(3, 3), V(3, 3);
  U << 1, 0.2, 0, 0.2, -1, 0.5, 0, 0.5, 0.3;
  V << 0.1, 1, 0, 1, 0, 0, 0, 0, 2;
  CHECK(m->inner(id, m->tangent(id, U), m->tangent(id, V)) == doctest::Approx((U * V).trace()));
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const Point x = m->random_point(id, 1.5, rng), y = m->random_point(id, 1.5, rng);
    CHECK(m->dist(m->exp(x, m->log(x, y)), y) < 1e-9);
    CHECK(m->dist(x, y) == doctest::Approx(m->dist(y, x)).epsilon(1e-10));
    CHECK(m->norm(y, m->transport(x, y, m->log(x, y)) + m->log(y, x)) < 1e-8);
  }
}

TEST_CASE("distance axioms and geodesic interpolation") {
  for (auto kind : {ManifoldKind::Euclidean, ManifoldKind::PoincareBall, ManifoldKind::SpdAffine,
                    ManifoldKind::DiagSpd}) {
    auto m = make_manifold({kind, 3});
    Rng rng(3);
    for (int k = 0; k < 30; ++k) {
      const Point x = m->random_point(m->origin(), 1.0, rng), y = m->random_point(m->origin(), 1.0, rng),
                  z = m->random_point(m->origin(), 1.0, rng);
      CHECK(m->dist(x, x) < 1e-12);
      CHECK(m->dist(x, z) <= m->dist(x, y) + m->dist(y, z) + 1e-12);
      CHECK(m->norm(x, m->log(x, y)) == doctest::Approx(m->dist(x, y)).epsilon(1e-10));
      CHECK(m->dist(x, m->geodesic(x, y, 0.3)) == doctest::Approx(0.3 * m->dist(x, y)).epsilon(1e-9));
      CHECK(m->norm(x, m->log(x, x)) < 1e-12);
    }
  }
}

TEST_CASE("zeta") {
  CHECK(zeta(0.0, 5.0) == 1.0);
  CHECK(zeta(-1.0, 1.0) == doctest::Approx(1.313035).epsilon(1e-6));
  CHECK(zeta(-1.0, 1e-9) == doctest::Approx(1.0));
  CHECK(zeta(-0.5, 3.0) >= 1.0);
  // monotone in the diameter
  CHECK(zeta(-1.0, 2.0) > zeta(-1.0, 1.0));
}

TEST_CASE("invalid inputs are rejected") {
  auto ball = make_manifold({ManifoldKind::PoincareBall, 2});
  CHECK_THROWS_AS(ball->point(col({1.0, 0.0})), DomainError);
  CHECK_THROWS_AS(ball->point(col({0.1, 0.1, 0.1})), DomainError);
  auto spd = make_manifold({ManifoldKind::SpdAffine, 2});
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 2, 2, 1;  // indefinite
  CHECK_THROWS_AS(spd->point(bad), DomainError);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(spd->tangent(spd->origin(), asym), DomainError);
  auto dg = make_manifold({ManifoldKind::DiagSpd, 2});
  Eigen::MatrixXd off(2, 2);
  off << 1, 0.1, 0.1, 1;
  CHECK_THROWS_AS(dg->point(off), DomainError);
  // tangent anchored elsewhere
  const Point x = ball->point(col({0.2, 0})), y = ball->point(col({0, 0.2}));
  CHECK_THROWS(ball->exp(y, ball->log(x, y)));
  CHECK_THROWS_AS(manifold_kind_from_string("sphere"), DomainError);
}

TEST_CASE("matrix functions") {
  Eigen::MatrixXd A(2, 2);
  A << 2, 1, 1, 2;
  const Eigen::MatrixXd L = linalg::spd_logm(A);
  CHECK((linalg::sym_expm(L) - A).norm() < 1e-12);
  const Eigen::MatrixXd S = linalg::spd_sqrtm(A);
  CHECK((S * S - A).norm() < 1e-12);
  CHECK((linalg::spd_inv_sqrtm(A) * S - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
  CHECK(linalg::is_positive_definite(A));
}
