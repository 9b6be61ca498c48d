#include "radar/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace radar::linalg {

namespace {
constexpr double kEigenFloor = 1e-300;
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& a) { return 0.5 * (a + a.transpose()); }

Eigen::MatrixXd sym_expm(const Eigen::MatrixXd& a) {
  return spectral_apply(a, [](double l) { return std::exp(l); });
}

Eigen::MatrixXd spd_logm(const Eigen::MatrixXd& a) {
  return spectral_apply(a, [](double l) { return std::log(std::max(l, kEigenFloor)); });
}

Eigen::MatrixXd spd_sqrtm(const Eigen::MatrixXd& a) {
  return spectral_apply(a, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

Eigen::MatrixXd spd_inv_sqrtm(const Eigen::MatrixXd& a) {
  return spectral_apply(a, [](double l) { return 1.0 / std::sqrt(std::max(l, kEigenFloor)); });
}

bool is_symmetric(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_diagonal(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j && std::abs(a(i, j)) > tol) return false;
  return true;
}

bool is_positive_definite(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  if (!a.allFinite()) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(symmetrize(a));
  return llt.info() == Eigen::Success;
}

}  // namespace radar::linalg
