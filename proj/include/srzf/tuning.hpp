#pragma once

#include <cstdint>

#include "srzf/asymptotics.hpp"
#include "srzf/precoding.hpp"

namespace srzf {

/// Scenario the precoder is tuned for: loads and SNRs, regularizers free.
struct Scenario {
  double alpha_l;
  double alpha_o;
  double mu_l;
  double mu_o;
};

struct GridConfig {
  double lambda_lo = 1e-3;
  double lambda_hi = 1e3;
  double theta_lo = 1e-3;
  double theta_hi = 1e3;
  int points_per_axis = 61;
  int refine_iterations = 3;  // each round shrinks the log-width by 10x
};

struct TunedParams {
  Scheme scheme;
  double lambda_star;  // holds zeta* for the RZF scheme
  double theta_star;   // 0 for RZF
  double rate_star;    // optimized asymptotic average secrecy rate, bits
  std::int64_t grid_evals;
  bool plateau;  // every probed point clipped to zero rate
};

/// Maximizes the asymptotic secrecy rate over (lambda, theta) by log-spaced
/// grid search plus shrinking-grid refinement. The theta axis always contains
/// the exact point theta = 0 so plain regularized inversion stays a candidate.
/// Deterministic: grid evaluations are schedule-independent and the argmax
/// tie-breaks toward smaller lambda, then smaller theta.
TunedParams tune_srzf(const Scenario& sc, const GridConfig& grid = {});

/// One-dimensional log-grid over zeta followed by golden-section refinement
/// around the incumbent bracket; theta fixed to 0.
TunedParams tune_rzf(const Scenario& sc, const GridConfig& grid = {});

}  // namespace srzf
