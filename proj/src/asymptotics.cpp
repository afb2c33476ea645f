#include "srzf/asymptotics.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "srzf/errors.hpp"

namespace srzf {

namespace {

void validate(const AsymptoticInputs& in) {
  if (in.lambda <= 0.0) throw ParameterError("lambda must be > 0");
  if (in.alpha_l < 0.0 || in.alpha_o < 0.0) throw ParameterError("channel loads must be >= 0");
  if (in.theta < 0.0) throw ParameterError("theta must be >= 0");
  if (in.mu_l < 0.0 || in.mu_o < 0.0) throw ParameterError("SNRs must be >= 0");
}

void require_users(const AsymptoticInputs& in) {
  if (in.alpha_l <= 0.0) {
    throw ParameterError("undefined limit: alpha_l must be > 0");
  }
}

}  // namespace

double fixed_point_residual(double x, const AsymptoticInputs& in) {
  return x * (in.lambda + in.alpha_l / (1.0 + x) +
              in.theta * in.alpha_o / (1.0 + in.theta * x)) -
         1.0;
}

double solve_fixed_point(const AsymptoticInputs& in) {
  validate(in);

  const double hi0 = 1.0 / in.lambda;
  // g(1/lambda) >= 0 with equality iff both load terms vanish; the root is
  // then exactly the resolvent value 1/lambda.
  if (fixed_point_residual(hi0, in) <= 0.0) return hi0;

  double lo = 1e-300;
  double hi = hi0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket narrowed to adjacent doubles
    if (fixed_point_residual(mid, in) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double stieltjes_derivative(double x, const AsymptoticInputs& in) {
  validate(in);
  const double d1 = 1.0 + x;
  const double d2 = 1.0 + in.theta * x;
  return x / (in.lambda + in.alpha_l / (d1 * d1) + in.theta * in.alpha_o / (d2 * d2));
}

double asymptotic_sinr(double x, double g_prime, const AsymptoticInputs& in) {
  validate(in);
  require_users(in);
  const double one_px2 = (1.0 + x) * (1.0 + x);
  return in.mu_l * x * x * one_px2 / (in.alpha_l * g_prime * (in.mu_l + one_px2));
}

double asymptotic_esnr(double x, const AsymptoticInputs& in) {
  validate(in);
  require_users(in);
  const double d = 1.0 + in.theta * x;
  return in.mu_o * in.alpha_o / (in.alpha_l * d * d);
}

AsymptoticPoint asymptotic_rate(const AsymptoticInputs& in) {
  AsymptoticPoint pt;
  pt.x = solve_fixed_point(in);
  pt.g_prime = stieltjes_derivative(pt.x, in);
  pt.sinr_asy = asymptotic_sinr(pt.x, pt.g_prime, in);
  pt.esnr_asy = asymptotic_esnr(pt.x, in);
  pt.rate = std::max(0.0, std::log2((1.0 + pt.sinr_asy) / (1.0 + pt.esnr_asy)));
  return pt;
}

double empirical_stieltjes(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& G,
                           double theta, double lambda) {
  if (lambda <= 0.0) throw ParameterError("lambda must be > 0");
  if (theta < 0.0) throw ParameterError("theta must be >= 0");
  const Eigen::Index M = H.cols();
  if (M < 1) throw InputError("H must have at least one column");
  if (G.rows() > 0 && G.cols() != M) throw InputError("H and G column counts differ");

  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(M, M);
  if (H.rows() > 0) Q.selfadjointView<Eigen::Lower>().rankUpdate(H.adjoint());
  if (theta > 0.0 && G.rows() > 0) {
    Q.selfadjointView<Eigen::Lower>().rankUpdate(G.adjoint(), theta);
  }
  Q.diagonal().array() += lambda;

  // tr(Q^{-1}) via Q = P L D L^H P^T: with Y = L^{-1}, the trace equals
  // sum_j ||Y.row(j)||^2 / d_j. Square-root free, so the pure-resolvent case
  // Q = lambda I comes out exact.
  const Eigen::LDLT<Eigen::MatrixXcd> ldlt(Q);
  Eigen::MatrixXcd Y = Eigen::MatrixXcd::Identity(M, M);
  ldlt.matrixL().solveInPlace(Y);
  const Eigen::VectorXd d = ldlt.vectorD().real();

  double trace = 0.0;
  for (Eigen::Index j = 0; j < M; ++j) {
    trace += Y.row(j).squaredNorm() / d(j);
  }
  return trace / static_cast<double>(M);
}

}  // namespace srzf
