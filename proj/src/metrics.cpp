#include "srzf/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "srzf/errors.hpp"

namespace srzf {

Eigen::VectorXd per_user_sinr(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& W,
                              double sigma2) {
  if (sigma2 <= 0.0) throw ParameterError("sigma2 must be > 0");
  if (H.cols() != W.rows() || H.rows() != W.cols()) {
    throw InputError("H (K x M) and W (M x K) are not conformable");
  }

  const Eigen::Index K = H.rows();
  const Eigen::MatrixXcd F = H * W;  // F(k, j) = h_k^T w_j
  Eigen::VectorXd sinr(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double signal = std::norm(F(k, k));
    const double interference = std::max(0.0, F.row(k).squaredNorm() - signal);
    sinr(k) = signal / (sigma2 + interference);
  }
  return sinr;
}

Eigen::VectorXd per_user_esnr(const Eigen::MatrixXcd& G, const Eigen::MatrixXcd& W,
                              double rho2) {
  if (rho2 <= 0.0) throw ParameterError("rho2 must be > 0");
  const Eigen::Index K = W.cols();
  if (G.rows() == 0) return Eigen::VectorXd::Zero(K);
  if (G.cols() != W.rows()) throw InputError("G and W are not conformable");

  const Eigen::MatrixXcd E = G * W;  // E(j, k) = g_j^T w_k
  Eigen::VectorXd esnr(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    esnr(k) = E.col(k).squaredNorm() / rho2;
  }
  return esnr;
}

RatePoint secrecy_rates(const Eigen::VectorXd& sinr, const Eigen::VectorXd& esnr) {
  if (sinr.size() != esnr.size()) throw InputError("sinr and esnr lengths differ");

  RatePoint pt;
  pt.sinr = sinr;
  pt.esnr = esnr;
  pt.rate.resize(sinr.size());
  for (Eigen::Index k = 0; k < sinr.size(); ++k) {
    pt.rate(k) = std::max(0.0, std::log2((1.0 + sinr(k)) / (1.0 + esnr(k))));
  }
  return pt;
}

double average_rate(const Eigen::VectorXd& rates) {
  if (rates.size() == 0) throw InputError("rates vector is empty");
  return rates.mean();
}

}  // namespace srzf
