#include "srzf/channel.hpp"

#include <cmath>
#include <string>

#include "srzf/errors.hpp"

namespace srzf {

namespace {

int load_to_count(int M, double load, const char* name) {
  const double raw = load * M;
  const int count = static_cast<int>(std::lround(raw));
  if (std::abs(raw - count) > 1e-9) {
    throw InputError(std::string(name) + "*M = " + std::to_string(raw) +
                     " is not an integer terminal count (M = " + std::to_string(M) + ")");
  }
  return count;
}

}  // namespace

SystemDims::SystemDims(int M_, int K_, int J_) : M(M_), K(K_), J(J_) {
  if (M < 1) throw InputError("M must be >= 1");
  if (K < 1) throw InputError("K must be >= 1");
  if (J < 0) throw InputError("J must be >= 0");
}

SystemDims SystemDims::from_loads(int M, double alpha_l, double alpha_o) {
  if (alpha_l < 0.0 || alpha_o < 0.0) throw ParameterError("channel loads must be >= 0");
  return SystemDims(M, load_to_count(M, alpha_l, "alpha_l"), load_to_count(M, alpha_o, "alpha_o"));
}

NoiseProfile::NoiseProfile(double sigma2_, double rho2_, double P_)
    : sigma2(sigma2_), rho2(rho2_), P(P_) {
  if (sigma2 <= 0.0) throw ParameterError("sigma2 must be > 0");
  if (rho2 <= 0.0) throw ParameterError("rho2 must be > 0");
  if (P < 0.0) throw ParameterError("P must be >= 0");
}

NoiseProfile NoiseProfile::from_snr_db(double mu_l_db, double mu_o_db, double P) {
  if (P <= 0.0) throw ParameterError("P must be > 0 when deriving noise from SNRs");
  const double mu_l = std::pow(10.0, mu_l_db / 10.0);
  const double mu_o = std::pow(10.0, mu_o_db / 10.0);
  return NoiseProfile(P / mu_l, P / mu_o, P);
}

Eigen::MatrixXcd gaussian_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                         double variance, const RandomStream& stream) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be >= 0");
  if (variance <= 0.0) throw ParameterError("variance must be > 0");

  Eigen::MatrixXcd out(rows, cols);
  auto rng = stream.engine();
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 * variance));
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      out(i, j) = std::complex<double>(re, im);
    }
  }
  return out;
}

ChannelRealization sample_channel(const SystemDims& dims, const RandomStream& stream) {
  const double variance = 1.0 / dims.M;
  return ChannelRealization{
      gaussian_complex_matrix(dims.K, dims.M, variance, stream.fork("H")),
      gaussian_complex_matrix(dims.J, dims.M, variance, stream.fork("G")),
  };
}

}  // namespace srzf
