#pragma once

#include <Eigen/Dense>

namespace radar {

// w_i e^{-beta l_i} / sum_j w_j e^{-beta l_j}, evaluated in log space.
Eigen::VectorXd hedge_update(const Eigen::VectorXd& w, const Eigen::VectorXd& losses, double beta);

// softmax(-beta (cumulative + m)) with max subtraction.
Eigen::VectorXd optimistic_hedge_weights(const Eigen::VectorXd& cumulative, const Eigen::VectorXd& m,
                                         double beta);

// (N+1) / (i (i+1) N) for i = 1..N. Sums to one.
Eigen::VectorXd radar_initial_weights(int n);

}  // namespace radar
