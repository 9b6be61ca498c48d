#include "radar/hedge.hpp"

#include <cmath>
#include <limits>

#include "radar/errors.hpp"
#include "radar/means.hpp"

namespace radar {

namespace {
Eigen::VectorXd normalized_exp(const Eigen::VectorXd& logits) {
  const double top = logits.maxCoeff();
  if (!std::isfinite(top)) throw DomainError("Hedge: no finite logit to normalize");
  Eigen::VectorXd e = (logits.array() - top).exp().matrix();
  const double z = e.sum();
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("Hedge: degenerate normalizer");
  return e / z;
}
}  // namespace

Eigen::VectorXd hedge_update(const Eigen::VectorXd& w, const Eigen::VectorXd& losses, double beta) {
  if (w.size() != losses.size()) throw DomainError("Hedge: weights and losses differ in length");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("Hedge: beta must be nonnegative");
  if (!losses.allFinite()) throw DomainError("Hedge: non-finite loss");
  check_weights(w, w.size());
  if (beta == 0.0) return w;
  Eigen::VectorXd logits(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    logits[i] = w[i] > 0.0 ? std::log(w[i]) - beta * losses[i] : -std::numeric_limits<double>::infinity();
  return normalized_exp(logits);
}

Eigen::VectorXd optimistic_hedge_weights(const Eigen::VectorXd& cumulative, const Eigen::VectorXd& m,
                                         double beta) {
  if (cumulative.size() != m.size() || cumulative.size() == 0)
    throw DomainError("optimistic Hedge: length mismatch");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("optimistic Hedge: beta must be nonnegative");
  if (!cumulative.allFinite() || !m.allFinite()) throw DomainError("optimistic Hedge: non-finite input");
  return normalized_exp(-beta * (cumulative + m));
}

Eigen::VectorXd radar_initial_weights(int n) {
  if (n < 1) throw DomainError("need at least one expert");
  Eigen::VectorXd w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = double(n + 1) / (double(i) * (i + 1) * n);
  return w / w.sum();  // exact up to rounding; renormalize to kill the last ulp
}

}  // namespace radar
