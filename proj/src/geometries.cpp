#include "geometries.hpp"

#include <cmath>

#include "radar/errors.hpp"
#include "radar/linalg.hpp"

namespace radar::detail {

namespace {

Eigen::MatrixXd gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Eigen::MatrixXd g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = n01(rng);
  return g;
}

}  // namespace

// ---------------- Euclidean ----------------

Point Euclidean::exp_impl(const Point& x, const Eigen::MatrixXd& v) const { return Point(x.coords + v); }
Eigen::MatrixXd Euclidean::log_impl(const Point& x, const Point& y) const { return y.coords - x.coords; }
double Euclidean::dist_impl(const Point& x, const Point& y) const { return (y.coords - x.coords).norm(); }
Eigen::MatrixXd Euclidean::transport_impl(const Point&, const Point&, const Eigen::MatrixXd& v) const {
  return v;
}
double Euclidean::inner_impl(const Point&, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const {
  return (u.array() * v.array()).sum();
}
Eigen::MatrixXd Euclidean::random_direction(Rng& rng) const { return gaussian(dim(), 1, rng); }

// ---------------- Poincare ball ----------------

Eigen::VectorXd PoincareBall::mobius_add(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double xy = x.dot(y), xx = x.squaredNorm(), yy = y.squaredNorm();
  const double den = 1.0 + 2.0 * xy + xx * yy;
  return ((1.0 + 2.0 * xy + yy) * x + (1.0 - xx) * y) / den;
}

// gyr[u,v]w, written out so it stays linear in w.
Eigen::VectorXd PoincareBall::gyration(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                       const Eigen::VectorXd& w) {
  const double uv = u.dot(v), uw = u.dot(w), vw = v.dot(w);
  const double uu = u.squaredNorm(), vv = v.squaredNorm();
  const double a = -uw * vv + vw + 2.0 * uv * vw;
  const double b = -vw * uu - uw;
  const double d = 1.0 + 2.0 * uv + uu * vv;
  return w + 2.0 * (a * u + b * v) / d;
}

namespace {
double conformal(const Eigen::VectorXd& x) { return 2.0 / (1.0 - x.squaredNorm()); }
}  // namespace

Point PoincareBall::exp_impl(const Point& x, const Eigen::MatrixXd& v) const {
  const Eigen::VectorXd xv = x.coords.col(0), vv = v.col(0);
  const double nv = vv.norm();
  if (nv == 0.0) return x;
  const double t = std::tanh(0.5 * conformal(xv) * nv);
  Eigen::VectorXd y = mobius_add(xv, (t / nv) * vv);
  // tanh saturates for very long steps; keep the result strictly inside.
  const double ny = y.norm();
  if (ny >= 1.0) y *= (1.0 - 1e-15) / ny;
  return Point(Eigen::MatrixXd(y));
}

Eigen::MatrixXd PoincareBall::log_impl(const Point& x, const Point& y) const {
  const Eigen::VectorXd xv = x.coords.col(0);
  const Eigen::VectorXd u = mobius_add(-xv, y.coords.col(0));
  const double nu = u.norm();
  if (nu == 0.0) return Eigen::MatrixXd::Zero(dim(), 1);
  return Eigen::MatrixXd((1.0 - xv.squaredNorm()) * std::atanh(nu) / nu * u);
}

double PoincareBall::dist_impl(const Point& x, const Point& y) const {
  const Eigen::VectorXd u = mobius_add(-x.coords.col(0), y.coords.col(0));
  return 2.0 * std::atanh(u.norm());
}

Eigen::MatrixXd PoincareBall::transport_impl(const Point& x, const Point& y,
                                             const Eigen::MatrixXd& v) const {
  const Eigen::VectorXd xv = x.coords.col(0), yv = y.coords.col(0);
  const double ratio = conformal(xv) / conformal(yv);
  return Eigen::MatrixXd(ratio * gyration(yv, -xv, v.col(0)));
}

double PoincareBall::inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const {
  const double lam = conformal(x.coords.col(0));
  return lam * lam * u.col(0).dot(v.col(0));
}

void PoincareBall::check_point_impl(const Eigen::MatrixXd& c) const {
  if (c.col(0).squaredNorm() >= 1.0) throw DomainError("point lies outside the open Poincare ball");
}

Eigen::MatrixXd PoincareBall::random_direction(Rng& rng) const { return gaussian(dim(), 1, rng); }

// ---------------- SPD, affine-invariant ----------------

namespace {
struct Roots {
  Eigen::MatrixXd half, inv_half;
};

Roots roots_of(const Eigen::MatrixXd& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(linalg::symmetrize(p));
  const Eigen::VectorXd l = es.eigenvalues().cwiseMax(1e-300);
  const Eigen::MatrixXd& v = es.eigenvectors();
  return {v * l.cwiseSqrt().asDiagonal() * v.transpose(),
          v * l.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose()};
}

// p^-1/2 q p^-1/2, symmetrized.
Eigen::MatrixXd whiten(const Roots& r, const Eigen::MatrixXd& q) {
  return linalg::symmetrize(r.inv_half * q * r.inv_half);
}
}  // namespace

Point SpdAffine::exp_impl(const Point& x, const Eigen::MatrixXd& v) const {
  const Roots r = roots_of(x.coords);
  return Point(linalg::symmetrize(r.half * linalg::sym_expm(whiten(r, v)) * r.half));
}

Eigen::MatrixXd SpdAffine::log_impl(const Point& x, const Point& y) const {
  const Roots r = roots_of(x.coords);
  return linalg::symmetrize(r.half * linalg::spd_logm(whiten(r, y.coords)) * r.half);
}

double SpdAffine::dist_impl(const Point& x, const Point& y) const {
  const Roots r = roots_of(x.coords);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(whiten(r, y.coords), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseMax(1e-300).array().log().matrix().norm();
}

Eigen::MatrixXd SpdAffine::transport_impl(const Point& x, const Point& y, const Eigen::MatrixXd& v) const {
  const Roots r = roots_of(x.coords);
  const Eigen::MatrixXd e = r.half * linalg::spd_sqrtm(whiten(r, y.coords)) * r.inv_half;
  return linalg::symmetrize(e * v * e.transpose());
}

double SpdAffine::inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const {
  Eigen::LLT<Eigen::MatrixXd> llt(x.coords);
  const Eigen::MatrixXd a = llt.solve(u), b = llt.solve(v);
  return (a * b).trace();
}

void SpdAffine::check_point_impl(const Eigen::MatrixXd& c) const {
  if (!linalg::is_symmetric(c)) throw DomainError("SPD point is not symmetric");
  if (!linalg::is_positive_definite(c)) throw DomainError("SPD point is not positive definite");
}

void SpdAffine::check_tangent_impl(const Eigen::MatrixXd& c) const {
  if (!linalg::is_symmetric(c)) throw DomainError("SPD tangent is not symmetric");
}

Eigen::MatrixXd SpdAffine::random_direction(Rng& rng) const {
  return linalg::symmetrize(gaussian(dim(), dim(), rng));
}

// ---------------- diagonal SPD ----------------

namespace {
Eigen::MatrixXd diag(const Eigen::VectorXd& d) { return d.asDiagonal(); }
}  // namespace

Point DiagSpd::exp_impl(const Point& x, const Eigen::MatrixXd& v) const {
  const Eigen::ArrayXd p = x.coords.diagonal().array();
  return Point(diag((p * (v.diagonal().array() / p).exp()).matrix()));
}

Eigen::MatrixXd DiagSpd::log_impl(const Point& x, const Point& y) const {
  const Eigen::ArrayXd p = x.coords.diagonal().array();
  return diag((p * (y.coords.diagonal().array() / p).log()).matrix());
}

double DiagSpd::dist_impl(const Point& x, const Point& y) const {
  return (y.coords.diagonal().array() / x.coords.diagonal().array()).log().matrix().norm();
}

Eigen::MatrixXd DiagSpd::transport_impl(const Point& x, const Point& y, const Eigen::MatrixXd& v) const {
  return diag((v.diagonal().array() * y.coords.diagonal().array() / x.coords.diagonal().array()).matrix());
}

double DiagSpd::inner_impl(const Point& x, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const {
  const Eigen::ArrayXd p = x.coords.diagonal().array();
  return (u.diagonal().array() * v.diagonal().array() / (p * p)).sum();
}

void DiagSpd::check_point_impl(const Eigen::MatrixXd& c) const {
  if (!linalg::is_diagonal(c)) throw DomainError("diagonal SPD point has off-diagonal entries");
  if ((c.diagonal().array() <= 0.0).any()) throw DomainError("diagonal SPD point is not positive");
}

void DiagSpd::check_tangent_impl(const Eigen::MatrixXd& c) const {
  if (!linalg::is_diagonal(c)) throw DomainError("diagonal SPD tangent has off-diagonal entries");
}

Eigen::MatrixXd DiagSpd::random_direction(Rng& rng) const {
  return diag(gaussian(dim(), 1, rng).col(0));
}

}  // namespace radar::detail
