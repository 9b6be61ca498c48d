#pragma once

#include <Eigen/Dense>

namespace radar::linalg {

// (A + A^T) / 2.
Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& a);

// Applies a scalar function to the spectrum of a symmetric matrix,
// V f(Lambda) V^T. The input is symmetrized first.
template <typename F>
Eigen::MatrixXd spectral_apply(const Eigen::MatrixXd& a, F&& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrize(a));
  Eigen::VectorXd mapped = es.eigenvalues().unaryExpr(f);
  Eigen::MatrixXd out = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
  return symmetrize(out);
}

Eigen::MatrixXd sym_expm(const Eigen::MatrixXd& a);
// Matrix logarithm of an SPD matrix; eigenvalues are clamped below at 1e-300.
Eigen::MatrixXd spd_logm(const Eigen::MatrixXd& a);
Eigen::MatrixXd spd_sqrtm(const Eigen::MatrixXd& a);
Eigen::MatrixXd spd_inv_sqrtm(const Eigen::MatrixXd& a);

bool is_symmetric(const Eigen::MatrixXd& a, double tol = 1e-10);
bool is_diagonal(const Eigen::MatrixXd& a, double tol = 0.0);
bool is_positive_definite(const Eigen::MatrixXd& a);

}  // namespace radar::linalg
