#pragma once

#include <Eigen/Dense>

#include "srzf/rng.hpp"

namespace srzf {

/// Antenna/user/eavesdropper counts. alpha_l = K/M and alpha_o = J/M are
/// derived on demand so they can never go stale.
struct SystemDims {
  int M;  // transmit antennas
  int K;  // legitimate single-antenna users
  int J;  // eavesdroppers

  SystemDims(int M_, int K_, int J_);

  /// Builds dims from channel loads; throws InputError unless alpha_l*M and
  /// alpha_o*M are integers (silent rounding would corrupt the loads).
  static SystemDims from_loads(int M, double alpha_l, double alpha_o);

  double alpha_l() const { return static_cast<double>(K) / M; }
  double alpha_o() const { return static_cast<double>(J) / M; }
};

/// Noise variances and power budget. mu_l = P/sigma2 and mu_o = P/rho2 hold
/// by construction.
struct NoiseProfile {
  double sigma2;  // legitimate receiver noise variance
  double rho2;    // eavesdropper noise variance
  double P;       // transmit power budget

  NoiseProfile(double sigma2_, double rho2_, double P_);

  /// dB convention: mu = 10^(dB/10), unit power budget unless given.
  static NoiseProfile from_snr_db(double mu_l_db, double mu_o_db, double P = 1.0);

  double mu_l() const { return P / sigma2; }
  double mu_o() const { return P / rho2; }
};

/// Row k of H is the channel of legitimate user k (h_k^T); row j of G is
/// eavesdropper j (g_j^T).
struct ChannelRealization {
  Eigen::MatrixXcd H;  // K x M
  Eigen::MatrixXcd G;  // J x M
};

/// i.i.d. circularly symmetric complex Gaussian entries: real and imaginary
/// parts independent N(0, variance/2). Identical output for identical stream
/// regardless of call context or thread count.
Eigen::MatrixXcd gaussian_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                         double variance, const RandomStream& stream);

/// Samples H (K x M) and G (J x M) with per-entry variance 1/M. H and G come
/// from disjoint sub-streams, so changing J leaves H untouched at fixed seed.
ChannelRealization sample_channel(const SystemDims& dims, const RandomStream& stream);

}  // namespace srzf
