#pragma once

#include <vector>

#include "radar/manifold.hpp"

namespace radar {

// Weight vectors are plain Eigen vectors; this enforces nonnegativity and
// unit sum (to 1e-12).
void check_weights(const Eigen::VectorXd& w, std::size_t expected_size);

struct MeanResult {
  Point x;
  double residual = 0.0;  // ||sum_i w_i log(x, x_i)||_x at the returned point
  int iterations = 0;
};

// Weighted Karcher mean via x <- exp(x, a * sum_i w_i log(x, x_i)), started at
// the heaviest point. a starts at 1 and is halved whenever the step would
// increase the objective, which only happens in curved spaces.
// Throws ConvergenceError if the residual is still above tol after max_iter.
MeanResult frechet_mean_detail(const Manifold& m, const std::vector<Point>& points,
                               const Eigen::VectorXd& w, double tol = 1e-9, int max_iter = 200);
Point frechet_mean(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w,
                   double tol = 1e-9, int max_iter = 200);

// Sequential geodesic averaging in input order:
// xbar_k = exp(xbar_{k-1}, (w_k / sum_{i<=k} w_i) log(xbar_{k-1}, x_k)).
Point geodesic_mean(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w);

// sum_i w_i d(x, x_i)^2
double frechet_objective(const Manifold& m, const std::vector<Point>& points, const Eigen::VectorXd& w,
                         const Point& x);

}  // namespace radar
