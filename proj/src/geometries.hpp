#pragma once

// Concrete geometries behind make_manifold. Not part of the public headers.

#include "radar/manifold.hpp"

namespace radar::detail {

class Euclidean final : public Manifold {
 public:
  using Manifold::Manifold;

 protected:
  Point exp_impl(const Point& x, const Eigen::MatrixXd& v) const override;
  Eigen::MatrixXd log_impl(const Point& x, const Point& y) const override;
  double dist_impl(const Point& x, const Point& y) const override;
  Eigen::MatrixXd transport_impl(const Point&, const Point&, const Eigen::MatrixXd& v) const override;
  double inner_impl(const Point&, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const override;
  void check_point_impl(const Eigen::MatrixXd&) const override {}
  void check_tangent_impl(const Eigen::MatrixXd&) const override {}
  Eigen::MatrixXd random_direction(Rng& rng) const override;
};

// Unit ball model, curvature -1. Tangent vectors use ambient coordinates.
class PoincareBall final : public Manifold {
 public:
  using Manifold::Manifold;

  static Eigen::VectorXd mobius_add(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
  static Eigen::VectorXd gyration(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                  const Eigen::VectorXd& w);

 protected:
  Point exp_impl(const Point& x, const Eigen::MatrixXd& v) const override;
  Eigen::MatrixXd log_impl(const Point& x, const Point& y) const override;
  double dist_impl(const Point& x, const Point& y) const override;
  Eigen::MatrixXd transport_impl(const Point& x, const Point& y, const Eigen::MatrixXd& v) const override;
  double inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const override;
  void check_point_impl(const Eigen::MatrixXd& c) const override;
  void check_tangent_impl(const Eigen::MatrixXd&) const override {}
  Eigen::MatrixXd random_direction(Rng& rng) const override;
};

// SPD matrices with the affine-invariant metric tr(p^-1 U p^-1 V).
class SpdAffine final : public Manifold {
 public:
  using Manifold::Manifold;

 protected:
  Point exp_impl(const Point& x, const Eigen::MatrixXd& v) const override;
  Eigen::MatrixXd log_impl(const Point& x, const Point& y) const override;
  double dist_impl(const Point& x, const Point& y) const override;
  Eigen::MatrixXd transport_impl(const Point& x, const Point& y, const Eigen::MatrixXd& v) const override;
  double inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const override;
  void check_point_impl(const Eigen::MatrixXd& c) const override;
  void check_tangent_impl(const Eigen::MatrixXd& c) const override;
  Eigen::MatrixXd random_direction(Rng& rng) const override;
};

// Diagonal SPD matrices. Same metric as SpdAffine restricted to the flat
// diagonal slice, so everything reduces to per-entry log coordinates.
class DiagSpd final : public Manifold {
 public:
  using Manifold::Manifold;

 protected:
  Point exp_impl(const Point& x, const Eigen::MatrixXd& v) const override;
  Eigen::MatrixXd log_impl(const Point& x, const Point& y) const override;
  double dist_impl(const Point& x, const Point& y) const override;
  Eigen::MatrixXd transport_impl(const Point& x, const Point& y, const Eigen::MatrixXd& v) const override;
  double inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const override;
  void check_point_impl(const Eigen::MatrixXd& c) const override;
  void check_tangent_impl(const Eigen::MatrixXd& c) const override;
  Eigen::MatrixXd random_direction(Rng& rng) const override;
};

}  // namespace radar::detail
