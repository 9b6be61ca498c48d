#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radar/convex_set.hpp"
#include "radar/manifold.hpp"

namespace radar {

struct LossFunction {
  std::function<double(const Point&)> value;
  std::function<Tangent(const Point&)> grad;  // Riemannian gradient at the point
  double G = 0.0;                             // gradient norm bound on the evaluation domain
  std::optional<double> L;                    // geodesic smoothness, when it exists
  bool nonnegative = false;
  std::string name;
};

using LossSequence = std::vector<LossFunction>;

// sum_i w_i d(x, a_i)^2. d_eval bounds d(x, a_i) over the evaluation domain,
// giving G = 2 d_eval and L = 2 zeta(kappa, d_eval).
LossFunction squared_distance_loss(std::shared_ptr<const Manifold> m, std::vector<Point> anchors,
                                   Eigen::VectorXd w, double d_eval);
// Same, with d_eval taken as the farthest an anchor can be from a point of `domain`.
LossFunction squared_distance_loss(std::shared_ptr<const Manifold> m, std::vector<Point> anchors,
                                   Eigen::VectorXd w, const GeodesicBall& domain);

// Busemann function of the ray t -> Exp_I(tX) on diagonal SPD matrices, times
// `scale`: value(p) = -scale * sum_i X_ii log p_ii, so value(Exp_I(Y)) =
// -scale * tr(XY). X must have unit norm at the identity.
LossFunction busemann_loss(std::shared_ptr<const Manifold> m, const Eigen::MatrixXd& direction,
                           double scale);

// <g, x> on a Euclidean space; handy for extragradient comparisons.
LossFunction linear_loss(std::shared_ptr<const Manifold> m, const Eigen::MatrixXd& g);

LossFunction zero_loss(std::shared_ptr<const Manifold> m);

// |(f(exp(x, hv)) - f(exp(x, -hv))) / 2h - <grad f(x), v>| with h = 1e-5.
double finite_difference_check(const Manifold& m, const LossFunction& f, const Point& x, const Tangent& v);

}  // namespace radar
