#pragma once

#include <Eigen/Dense>
#include <memory>
#include <random>
#include <string>

namespace radar {

enum class ManifoldKind { Euclidean, PoincareBall, SpdAffine, DiagSpd };

std::string to_string(ManifoldKind kind);
ManifoldKind manifold_kind_from_string(const std::string& name);

struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Euclidean;
  int dim = 2;  // vector length, or matrix size n for the SPD kinds

  // Lower bound on sectional curvature used for algorithm constants.
  // DiagSpd is a flat submanifold so it gets 0, not the ambient -1/2.
  double curvature() const;
  bool operator==(const ManifoldSpec&) const = default;
};

// Points on vector manifolds are dim x 1 columns; SPD points are n x n.
struct Point {
  Eigen::MatrixXd coords;

  Point() = default;
  explicit Point(Eigen::MatrixXd c) : coords(std::move(c)) {}
};

bool same_point(const Point& a, const Point& b, double tol = 1e-12);

// A tangent vector remembers its base point so misuse (adding vectors from
// different tangent spaces, feeding exp the wrong anchor) throws.
struct Tangent {
  Point base;
  Eigen::MatrixXd coords;

  Tangent() = default;
  Tangent(Point b, Eigen::MatrixXd c) : base(std::move(b)), coords(std::move(c)) {}

  Tangent operator-() const { return {base, -coords}; }
  Tangent& operator+=(const Tangent& o);
  Tangent& operator-=(const Tangent& o);
  Tangent& operator*=(double s) {
    coords *= s;
    return *this;
  }
};

Tangent operator+(Tangent a, const Tangent& b);
Tangent operator-(Tangent a, const Tangent& b);
Tangent operator*(double s, Tangent v);
Tangent operator*(Tangent v, double s);

using Rng = std::mt19937_64;

class Manifold {
 public:
  explicit Manifold(ManifoldSpec spec) : spec_(spec) {}
  virtual ~Manifold() = default;

  const ManifoldSpec& spec() const { return spec_; }
  ManifoldKind kind() const { return spec_.kind; }
  int dim() const { return spec_.dim; }
  double curvature() const { return spec_.curvature(); }

  // Checked entry points. Each validates shapes, domain membership and
  // tangent anchoring, then dispatches to the geometry.
  Point exp(const Point& x, const Tangent& v) const;
  Tangent log(const Point& x, const Point& y) const;
  double dist(const Point& x, const Point& y) const;
  Tangent transport(const Point& x, const Point& y, const Tangent& v) const;
  double inner(const Point& x, const Tangent& u, const Tangent& v) const;
  double norm(const Point& x, const Tangent& u) const;

  // exp(x, t * log(x, y)): the point a fraction t along the geodesic.
  Point geodesic(const Point& x, const Point& y, double t) const;

  Tangent zero(const Point& x) const;
  Point origin() const;  // 0 for vector kinds, identity for SPD kinds

  // Builds a point / tangent from raw coordinates, validating them.
  Point point(const Eigen::MatrixXd& coords) const;
  Tangent tangent(const Point& x, const Eigen::MatrixXd& coords) const;

  void check_point(const Point& x) const;
  void check_tangent(const Point& x, const Tangent& v) const;

  // Gaussian direction at x rescaled to unit Riemannian norm.
  Tangent random_unit_tangent(const Point& x, Rng& rng) const;
  // exp(center, r u) with u a random unit direction and r uniform in [0, radius].
  Point random_point(const Point& center, double radius, Rng& rng) const;

 protected:
  virtual Point exp_impl(const Point& x, const Eigen::MatrixXd& v) const = 0;
  virtual Eigen::MatrixXd log_impl(const Point& x, const Point& y) const = 0;
  virtual double dist_impl(const Point& x, const Point& y) const = 0;
  virtual Eigen::MatrixXd transport_impl(const Point& x, const Point& y,
                                         const Eigen::MatrixXd& v) const = 0;
  virtual double inner_impl(const Point& x, const Eigen::MatrixXd& u,
                            const Eigen::MatrixXd& v) const = 0;
  virtual void check_point_impl(const Eigen::MatrixXd& c) const = 0;
  virtual void check_tangent_impl(const Eigen::MatrixXd& c) const = 0;
  virtual Eigen::MatrixXd random_direction(Rng& rng) const = 0;

 private:
  ManifoldSpec spec_;
};

std::shared_ptr<const Manifold> make_manifold(const ManifoldSpec& spec);

// s coth(s) with s = sqrt(-kappa) * D. Equals 1 in the flat case.
double zeta(double kappa, double diameter);

}  // namespace radar
