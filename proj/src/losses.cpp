#include "radar/losses.hpp"

#include <cmath>

#include "radar/errors.hpp"
#include "radar/means.hpp"

namespace radar {

LossFunction squared_distance_loss(std::shared_ptr<const Manifold> m, std::vector<Point> anchors,
                                   Eigen::VectorXd w, double d_eval) {
  if (anchors.empty()) throw DomainError("squared distance loss needs at least one anchor");
  check_weights(w, anchors.size());
  for (const auto& a : anchors) m->check_point(a);
  if (!(d_eval >= 0.0)) throw DomainError("evaluation radius must be nonnegative");

  auto shared = std::make_shared<const std::pair<std::vector<Point>, Eigen::VectorXd>>(std::move(anchors),
                                                                                     std::move(w));
  LossFunction f;
  f.name = "squared_distance";
  f.value = [m, shared](const Point& x) {
    const auto& [pts, wt] = *shared;
    return frechet_objective(*m, pts, wt, x);
  };
  f.grad = [m, shared](const Point& x) {
    const auto& [pts, wt] = *shared;
    Tangent g = m->zero(x);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (wt[i] != 0.0) g -= (2.0 * wt[i]) * m->log(x, pts[i]);
    return g;
  };
  f.G = 2.0 * d_eval;
  f.L = 2.0 * zeta(m->curvature(), d_eval);
  f.nonnegative = true;
  return f;
}

LossFunction squared_distance_loss(std::shared_ptr<const Manifold> m, std::vector<Point> anchors,
                                   Eigen::VectorXd w, const GeodesicBall& domain) {
  double far = 0.0;
  for (const auto& a : anchors) far = std::max(far, m->dist(domain.center(), a));
  return squared_distance_loss(std::move(m), std::move(anchors), std::move(w), domain.radius() + far);
}

LossFunction busemann_loss(std::shared_ptr<const Manifold> m, const Eigen::MatrixXd& direction,
                           double scale) {
  if (m->kind() != ManifoldKind::DiagSpd) throw DomainError("Busemann loss is defined on diagonal SPD");
  const Point id = m->origin();
  const Tangent x = m->tangent(id, direction);
  if (std::abs(m->norm(id, x) - 1.0) > 1e-9) throw DomainError("Busemann direction must have unit norm");
  if (!(scale >= 0.0)) throw DomainError("Busemann scale must be nonnegative");

  const Eigen::VectorXd xd = direction.diagonal();
  LossFunction f;
  f.name = "busemann";
  f.value = [xd, scale](const Point& p) {
    return -scale * (xd.array() * p.coords.diagonal().array().log()).sum();
  };
  // Euclidean gradient -X_i / p_i raised by the metric p_i^2; it points
  // against the ray, and its norm is exactly `scale`.
  f.grad = [xd, scale](const Point& p) {
    Eigen::MatrixXd g = (-scale * xd.array() * p.coords.diagonal().array()).matrix().asDiagonal();
    return Tangent(p, std::move(g));
  };
  f.G = scale;
  f.nonnegative = false;
  return f;
}

LossFunction linear_loss(std::shared_ptr<const Manifold> m, const Eigen::MatrixXd& g) {
  if (m->kind() != ManifoldKind::Euclidean) throw DomainError("linear loss needs a Euclidean space");
  m->check_point(Point(g));
  LossFunction f;
  f.name = "linear";
  f.value = [g](const Point& x) { return (g.array() * x.coords.array()).sum(); };
  f.grad = [g](const Point& x) { return Tangent(x, g); };
  f.G = g.norm();
  f.L = 0.0;
  f.nonnegative = false;
  return f;
}

LossFunction zero_loss(std::shared_ptr<const Manifold> m) {
  LossFunction f;
  f.name = "zero";
  f.value = [](const Point&) { return 0.0; };
  f.grad = [m](const Point& x) { return m->zero(x); };
  f.G = 0.0;
  f.L = 0.0;
  f.nonnegative = true;
  return f;
}

double finite_difference_check(const Manifold& m, const LossFunction& f, const Point& x, const Tangent& v) {
  constexpr double h = 1e-5;
  const double fp = f.value(m.exp(x, h * v));
  const double fm = f.value(m.exp(x, -h * v));
  return std::abs((fp - fm) / (2.0 * h) - m.inner(x, f.grad(x), v));
}

}  // namespace radar
