#include "radar/means.hpp"

#include <cmath>

#include "radar/errors.hpp"

namespace radar {

void check_weights(const Eigen::VectorXd& w, std::size_t expected_size) {
  if (static_cast<std::size_t>(w.size()) != expected_size)
    throw DomainError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                      std::to_string(expected_size));
  if (w.size() == 0) throw DomainError("empty weight vector");
  if (!w.allFinite() || (w.array() < 0.0).any()) throw DomainError("weights must be finite and nonnegative");
  if (std::abs(w.sum() - 1.0) > 1e-12) throw DomainError("weights do not sum to one");
}

namespace {
void check_inputs(const std::vector<Point>& points, const Eigen::VectorXd& w) {
  if (points.empty()) throw DomainError("mean of an empty point list");
  check_weights(w, points.size());
}

Tangent weighted_log_sum(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w,
                         const Point& x) {
  Tangent g = m.zero(x);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (w[i] > 0.0) g += w[i] * m.log(x, points[i]);
  return g;
}
}  // namespace

double frechet_objective(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w,
                         const Point& x) {
  double f = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double d = m.dist(x, points[i]);
    f += w[i] * d * d;
  }
  return f;
}

MeanResult frechet_mean_detail(const Manifold& m, const std::vector<Point>& points,
                               const Eigen::VectorXd& w, double tol, int max_iter) {
  check_inputs(points, w);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  Eigen::Index heaviest = 0;
  w.maxCoeff(&heaviest);
  MeanResult out{points[heaviest], 0.0, 0};

  double f = frechet_objective(m, points, w, out.x);
  double step = 1.0;
  for (;;) {
    const Tangent g = weighted_log_sum(m, points, w, out.x);
    out.residual = m.norm(out.x, g);
    if (out.residual <= tol) return out;
    if (out.iterations >= max_iter) throw ConvergenceError("Frechet mean did not converge", out.residual);
    ++out.iterations;

    // At most a few halvings; on Hadamard manifolds with moderate diameter the
    // full step is almost always accepted.
    Point next = out.x;
    double fn = f;
    for (int k = 0; k < 40; ++k) {
      next = m.exp(out.x, step * g);
      fn = frechet_objective(m, points, w, next);
      if (fn <= f + 1e-15 * (1.0 + f)) break;
      step *= 0.5;
    }
    out.x = std::move(next);
    f = fn;
    // let the step recover after a cut
    step = std::min(1.0, 2.0 * step);
  }
}

Point frechet_mean(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w, double tol,
                   int max_iter) {
  return frechet_mean_detail(m, points, w, tol, max_iter).x;
}

Point geodesic_mean(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w) {
  check_inputs(points, w);
  Point x = points[0];
  m.check_point(x);
  double prefix = w[0];
  for (std::size_t k = 1; k < points.size(); ++k) {
    prefix += w[k];
    const double frac = prefix > 0.0 ? w[k] / prefix : 0.0;
    if (frac > 0.0) x = m.geodesic(x, points[k], frac);
  }
  return x;
}

}  // namespace radar
