#include "srzf/precoding.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "srzf/errors.hpp"

namespace srzf {

const char* scheme_name(Scheme s) { return s == Scheme::Rzf ? "RZF" : "SRZF"; }

Eigen::MatrixXcd srzf_shaping_matrix(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& G,
                                     const SrzfParams& params) {
  if (params.lambda <= 0.0) throw ParameterError("lambda must be > 0");
  if (params.theta < 0.0) throw ParameterError("theta must be >= 0");
  if (H.rows() == 0 || H.cols() == 0) throw InputError("H must be non-empty");
  if (G.rows() > 0 && G.cols() != H.cols()) {
    throw InputError("H and G column counts differ");
  }

  const Eigen::Index M = H.cols();
  // Q = H^H H + theta G^H G + lambda I, assembled in the lower triangle only.
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(M, M);
  Q.selfadjointView<Eigen::Lower>().rankUpdate(H.adjoint());
  if (params.theta > 0.0 && G.rows() > 0) {
    Q.selfadjointView<Eigen::Lower>().rankUpdate(G.adjoint(), params.theta);
  }
  Q.diagonal().array() += params.lambda;

  return Eigen::LLT<Eigen::MatrixXcd>(Q).solve(H.adjoint());
}

Eigen::MatrixXcd rzf_shaping_matrix(const Eigen::MatrixXcd& H, const RzfParams& params) {
  if (params.zeta <= 0.0) throw ParameterError("zeta must be > 0");
  if (H.rows() == 0 || H.cols() == 0) throw InputError("H must be non-empty");

  const Eigen::Index K = H.rows();
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(K, K);
  S.selfadjointView<Eigen::Lower>().rankUpdate(H);
  S.diagonal().array() += params.zeta;

  // H^H S^{-1} = (S^{-1} H)^H since S is Hermitian.
  return Eigen::LLT<Eigen::MatrixXcd>(S).solve(H).adjoint();
}

PrecoderOutput normalize_power(const Eigen::MatrixXcd& A, double P, Eigen::Index M) {
  if (A.rows() != M || M < 1) throw InputError("A must be M x K");
  if (P < 0.0) throw ParameterError("P must be >= 0");

  const double beta = A.squaredNorm() / static_cast<double>(M);
  if (beta <= 0.0) throw ParameterError("degenerate precoder: shaping matrix is zero");

  PrecoderOutput out;
  out.A = A;
  out.beta = beta;
  out.P = P;
  out.W = std::sqrt(P / beta) * A;
  return out;
}

double leakage(const Eigen::MatrixXcd& G, const Eigen::MatrixXcd& W) {
  if (G.rows() > 0 && G.cols() != W.rows()) throw InputError("G and W are not conformable");
  return (G * W).squaredNorm();
}

}  // namespace srzf
