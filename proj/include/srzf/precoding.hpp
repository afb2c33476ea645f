#pragma once

#include <Eigen/Dense>

namespace srzf {

enum class Scheme { Rzf, Srzf };

const char* scheme_name(Scheme s);

struct SrzfParams {
  double lambda;  // ridge regularizer, > 0
  double theta;   // leakage penalty weight, >= 0
};

struct RzfParams {
  double zeta;  // regularizer, > 0
};

/// Power-normalized precoder: W = sqrt(P/beta) * A with beta = tr(A A^H)/M,
/// so tr(W W^H) = M*P holds with equality.
struct PrecoderOutput {
  Eigen::MatrixXcd W;  // M x K, columns are per-user beamformers
  Eigen::MatrixXcd A;  // unnormalized shaping matrix
  double beta;
  double P;
};

/// A(lambda,theta) = (H^H H + theta G^H G + lambda I)^{-1} H^H. The regularized
/// Gram matrix is Hermitian positive definite for lambda > 0 and is inverted
/// through a Cholesky solve.
Eigen::MatrixXcd srzf_shaping_matrix(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& G,
                                     const SrzfParams& params);

/// A(zeta) = H^H (H H^H + zeta I)^{-1}; equals (H^H H + zeta I)^{-1} H^H by the
/// push-through identity.
Eigen::MatrixXcd rzf_shaping_matrix(const Eigen::MatrixXcd& H, const RzfParams& params);

PrecoderOutput normalize_power(const Eigen::MatrixXcd& A, double P, Eigen::Index M);

/// Total leakage power at the eavesdroppers, ||G W||_F^2.
double leakage(const Eigen::MatrixXcd& G, const Eigen::MatrixXcd& W);

}  // namespace srzf
