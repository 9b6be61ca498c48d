#include "radar/manifold.hpp"

#include <cmath>

#include "geometries.hpp"
#include "radar/errors.hpp"

namespace radar {

std::string to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Euclidean: return "euclidean";
    case ManifoldKind::PoincareBall: return "poincare_ball";
    case ManifoldKind::SpdAffine: return "spd_affine";
    case ManifoldKind::DiagSpd: return "diag_spd";
  }
  return "?";
}

ManifoldKind manifold_kind_from_string(const std::string& name) {
  if (name == "euclidean" || name == "Euclidean") return ManifoldKind::Euclidean;
  if (name == "poincare_ball" || name == "PoincareBall" || name == "poincare")
    return ManifoldKind::PoincareBall;
  if (name == "spd_affine" || name == "SpdAffine" || name == "spd") return ManifoldKind::SpdAffine;
  if (name == "diag_spd" || name == "DiagSpd") return ManifoldKind::DiagSpd;
  throw DomainError("unknown manifold kind '" + name + "'");
}

double ManifoldSpec::curvature() const {
  switch (kind) {
    case ManifoldKind::PoincareBall: return -1.0;
    case ManifoldKind::SpdAffine: return -0.5;
    default: return 0.0;
  }
}

bool same_point(const Point& a, const Point& b, double tol) {
  if (a.coords.rows() != b.coords.rows() || a.coords.cols() != b.coords.cols()) return false;
  if (a.coords.size() == 0) return true;
  const double scale = 1.0 + a.coords.cwiseAbs().maxCoeff();
  return (a.coords - b.coords).cwiseAbs().maxCoeff() <= tol * scale;
}

namespace {
void require_same_base(const Tangent& a, const Tangent& b) {
  if (!same_point(a.base, b.base)) throw DomainError("tangent vectors live at different base points");
  if (a.coords.rows() != b.coords.rows() || a.coords.cols() != b.coords.cols())
    throw DomainError("tangent dimension mismatch");
}
}  // namespace

Tangent& Tangent::operator+=(const Tangent& o) {
  require_same_base(*this, o);
  coords += o.coords;
  return *this;
}

Tangent& Tangent::operator-=(const Tangent& o) {
  require_same_base(*this, o);
  coords -= o.coords;
  return *this;
}

Tangent operator+(Tangent a, const Tangent& b) { return a += b; }
Tangent operator-(Tangent a, const Tangent& b) { return a -= b; }
Tangent operator*(double s, Tangent v) { return v *= s; }
Tangent operator*(Tangent v, double s) { return v *= s; }

// ---- checked wrappers ----

void Manifold::check_point(const Point& x) const {
  const auto& c = x.coords;
  const bool vec = kind() == ManifoldKind::Euclidean || kind() == ManifoldKind::PoincareBall;
  const Eigen::Index rows = dim(), cols = vec ? 1 : dim();
  if (c.rows() != rows || c.cols() != cols)
    throw DomainError("point has shape " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                      ", expected " + std::to_string(rows) + "x" + std::to_string(cols) + " for " +
                      to_string(kind()));
  if (!c.allFinite()) throw DomainError("point has non-finite coordinates");
  check_point_impl(c);
}

void Manifold::check_tangent(const Point& x, const Tangent& v) const {
  if (!same_point(x, v.base)) throw DomainError("tangent vector is not anchored at the given point");
  if (v.coords.rows() != x.coords.rows() || v.coords.cols() != x.coords.cols())
    throw DomainError("tangent dimension mismatch");
  if (!v.coords.allFinite()) throw DomainError("tangent has non-finite coordinates");
  check_tangent_impl(v.coords);
}

Point Manifold::exp(const Point& x, const Tangent& v) const {
  check_point(x);
  check_tangent(x, v);
  return exp_impl(x, v.coords);
}

Tangent Manifold::log(const Point& x, const Point& y) const {
  check_point(x);
  check_point(y);
  return Tangent(x, log_impl(x, y));
}

double Manifold::dist(const Point& x, const Point& y) const {
  check_point(x);
  check_point(y);
  return dist_impl(x, y);
}

Tangent Manifold::transport(const Point& x, const Point& y, const Tangent& v) const {
  check_point(x);
  check_point(y);
  check_tangent(x, v);
  return Tangent(y, transport_impl(x, y, v.coords));
}

double Manifold::inner(const Point& x, const Tangent& u, const Tangent& v) const {
  check_point(x);
  check_tangent(x, u);
  check_tangent(x, v);
  return inner_impl(x, u.coords, v.coords);
}

double Manifold::norm(const Point& x, const Tangent& u) const {
  return std::sqrt(std::max(0.0, inner(x, u, u)));
}

Point Manifold::geodesic(const Point& x, const Point& y, double t) const {
  return exp(x, t * log(x, y));
}

Tangent Manifold::zero(const Point& x) const {
  return Tangent(x, Eigen::MatrixXd::Zero(x.coords.rows(), x.coords.cols()));
}

Point Manifold::origin() const {
  switch (kind()) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::PoincareBall: return Point(Eigen::MatrixXd::Zero(dim(), 1));
    default: return Point(Eigen::MatrixXd::Identity(dim(), dim()));
  }
}

Point Manifold::point(const Eigen::MatrixXd& coords) const {
  Point p(coords);
  check_point(p);
  return p;
}

Tangent Manifold::tangent(const Point& x, const Eigen::MatrixXd& coords) const {
  Tangent v(x, coords);
  check_tangent(x, v);
  return v;
}

Tangent Manifold::random_unit_tangent(const Point& x, Rng& rng) const {
  for (;;) {
    Tangent v(x, random_direction(rng));
    const double n = norm(x, v);
    if (n > 1e-12) return v * (1.0 / n);
  }
}

Point Manifold::random_point(const Point& center, double radius, Rng& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = radius * unif(rng);
  return exp(center, r * random_unit_tangent(center, rng));
}

std::shared_ptr<const Manifold> make_manifold(const ManifoldSpec& spec) {
  if (spec.dim < 1) throw DomainError("manifold dimension must be positive");
  switch (spec.kind) {
    case ManifoldKind::Euclidean: return std::make_shared<detail::Euclidean>(spec);
    case ManifoldKind::PoincareBall: return std::make_shared<detail::PoincareBall>(spec);
    case ManifoldKind::SpdAffine: return std::make_shared<detail::SpdAffine>(spec);
    case ManifoldKind::DiagSpd: return std::make_shared<detail::DiagSpd>(spec);
  }
  throw DomainError("unknown manifold kind");
}

double zeta(double kappa, double diameter) {
  if (kappa > 0.0) throw DomainError("zeta needs nonpositive curvature");
  if (diameter < 0.0) throw DomainError("zeta needs a nonnegative diameter");
  if (kappa == 0.0) return 1.0;
  const double s = std::sqrt(-kappa) * diameter;
  if (s < 1e-6) return 1.0 + s * s / 3.0;
  return s / std::tanh(s);
}

}  // namespace radar
