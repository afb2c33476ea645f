#pragma once

#include <Eigen/Dense>

namespace srzf {

/// Per-user link quality and the resulting secrecy rates in bits:
/// rate_k = max(0, log2((1 + sinr_k) / (1 + esnr_k))).
struct RatePoint {
  Eigen::VectorXd sinr;
  Eigen::VectorXd esnr;
  Eigen::VectorXd rate;
};

/// sinr_k = |h_k^T w_k|^2 / (sigma2 + sum_{j != k} |h_k^T w_j|^2)
Eigen::VectorXd per_user_sinr(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& W,
                              double sigma2);

/// esnr_k = ||G w_k||^2 / rho2, the aggregate receive SNR of stream k at the
/// cooperating eavesdroppers. Zero vector when there are no eavesdroppers.
Eigen::VectorXd per_user_esnr(const Eigen::MatrixXcd& G, const Eigen::MatrixXcd& W,
                              double rho2);

RatePoint secrecy_rates(const Eigen::VectorXd& sinr, const Eigen::VectorXd& esnr);

double average_rate(const Eigen::VectorXd& rates);

}  // namespace srzf
