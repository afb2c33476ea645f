#pragma once

#include <Eigen/Dense>

namespace srzf {

struct AsymptoticInputs {
  double alpha_l;  // legitimate channel load K/M
  double alpha_o;  // overhearing channel load J/M
  double theta;    // leakage penalty weight (0 for plain regularized inversion)
  double lambda;   // regularizer, > 0
  double mu_l;     // receive SNR at legitimate terminals, P/sigma2
  double mu_o;     // receive SNR at eavesdroppers, P/rho2
};

/// Large-system operating point. x is the Stieltjes transform of the shaped
/// Gram spectrum evaluated at -lambda; g_prime its derivative there.
struct AsymptoticPoint {
  double x;
  double g_prime;
  double sinr_asy;
  double esnr_asy;
  double rate;  // bits, clipped at zero
};

/// Unique positive root of
///   lambda + alpha_l/(1+x) + theta*alpha_o/(1+theta*x) = 1/x
/// on (0, 1/lambda]. The transformed residual
///   g(x) = x*(lambda + alpha_l/(1+x) + theta*alpha_o/(1+theta*x)) - 1
/// is strictly increasing with g(0+) = -1 and g(1/lambda) >= 0, so bisection
/// converges unconditionally; |g(x)| <= 1e-12 on return.
double solve_fixed_point(const AsymptoticInputs& in);

/// Residual of the fixed-point equation at x (exposed for tests/diagnostics).
double fixed_point_residual(double x, const AsymptoticInputs& in);

/// x / (lambda + alpha_l/(1+x)^2 + theta*alpha_o/(1+theta*x)^2), evaluated at
/// the solved fixed point.
double stieltjes_derivative(double x, const AsymptoticInputs& in);

/// mu_l x^2 (1+x)^2 / (alpha_l g' [mu_l + (1+x)^2]); requires alpha_l > 0.
double asymptotic_sinr(double x, double g_prime, const AsymptoticInputs& in);

/// mu_o alpha_o / (alpha_l (1+theta*x)^2); requires alpha_l > 0.
double asymptotic_esnr(double x, const AsymptoticInputs& in);

/// Solves the fixed point and assembles the full large-system rate point.
AsymptoticPoint asymptotic_rate(const AsymptoticInputs& in);

/// Finite-size counterpart tr((H^H H + theta G^H G + lambda I)^{-1}) / M,
/// the sampled oracle that solve_fixed_point's root concentrates on.
/// H may have zero rows; M is taken from H's column count.
double empirical_stieltjes(const Eigen::MatrixXcd& H, const Eigen::MatrixXcd& G,
                           double theta, double lambda);

}  // namespace srzf
