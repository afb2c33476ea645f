#include <doctest.h>

#include <cmath>
#include <complex>

#include "srzf/errors.hpp"
#include "srzf/montecarlo.hpp"
#include "srzf/tuning.hpp"

using namespace srzf;

TEST_SUITE("montecarlo") {

TEST_CASE("zero power gives zero rates") {
  const SystemDims dims(8, 4, 2);
  const NoiseProfile noise(1.0, 1.0, 0.0);
  const MonteCarloEstimate est =
      estimate_ergodic_rate(dims, noise, SchemeSpec::srzf(1.0, 1.0), 10, 5);
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("single trial equals a straight-line evaluation of the sampled channel") {
  const SystemDims dims(2, 1, 1);
  const NoiseProfile noise(0.8, 1.6, 2.0);
  const double lambda = 0.7, theta = 1.3;
  const std::uint64_t seed = 91;

  const MonteCarloEstimate est =
      estimate_ergodic_rate(dims, noise, SchemeSpec::srzf(lambda, theta), 1, seed);
  CHECK(est.std_error == 0.0);

  // Same sub-stream the estimator derives for trial 0.
  const ChannelRealization ch = sample_channel(dims, RandomStream(seed).fork(0));
  using C = std::complex<double>;
  const C h0 = ch.H(0, 0), h1 = ch.H(0, 1);
  const C g0 = ch.G(0, 0), g1 = ch.G(0, 1);

  // Q = h^* h^T + theta g^* g^T + lambda I, inverted by adjugate.
  const C q00 = std::conj(h0) * h0 + theta * std::conj(g0) * g0 + lambda;
  const C q01 = std::conj(h0) * h1 + theta * std::conj(g0) * g1;
  const C q10 = std::conj(h1) * h0 + theta * std::conj(g1) * g0;
  const C q11 = std::conj(h1) * h1 + theta * std::conj(g1) * g1 + lambda;
  const C det = q00 * q11 - q01 * q10;
  const C a0 = (q11 * std::conj(h0) - q01 * std::conj(h1)) / det;
  const C a1 = (-q10 * std::conj(h0) + q00 * std::conj(h1)) / det;

  const double beta = (std::norm(a0) + std::norm(a1)) / 2.0;
  const double scale = std::sqrt(noise.P / beta);
  const C w0 = scale * a0, w1 = scale * a1;

  const double sinr = std::norm(h0 * w0 + h1 * w1) / noise.sigma2;
  const double esnr = std::norm(g0 * w0 + g1 * w1) / noise.rho2;
  const double rate = std::max(0.0, std::log2((1.0 + sinr) / (1.0 + esnr)));

  CHECK(est.mean == doctest::Approx(rate).epsilon(1e-12));
}

TEST_CASE("parallel and serial paths agree bit for bit") {
  const SystemDims dims(16, 8, 4);
  const NoiseProfile noise = NoiseProfile::from_snr_db(0.0, 0.0);
  const SchemeSpec spec = SchemeSpec::srzf(0.5, 1.5);

  const MonteCarloEstimate par = estimate_ergodic_rate(dims, noise, spec, 50, 12);
  const MonteCarloEstimate ser = estimate_ergodic_rate_serial(dims, noise, spec, 50, 12);
  CHECK(par.mean == ser.mean);
  CHECK(par.std_error == ser.std_error);
  CHECK(par.max_power_rel_error == ser.max_power_rel_error);
}

TEST_CASE("estimates are reproducible and seed-sensitive") {
  const SystemDims dims(16, 8, 4);
  const NoiseProfile noise = NoiseProfile::from_snr_db(0.0, 0.0);
  const SchemeSpec spec = SchemeSpec::rzf(0.5);

  const MonteCarloEstimate a = estimate_ergodic_rate(dims, noise, spec, 20, 3);
  const MonteCarloEstimate b = estimate_ergodic_rate(dims, noise, spec, 20, 3);
  const MonteCarloEstimate c = estimate_ergodic_rate(dims, noise, spec, 20, 4);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean != c.mean);
}

TEST_CASE("per-trial spread is small at M = 128") {
  const TunedParams tuned = tune_srzf({0.5, 0.25, 1.0, 1.0});
  const SystemDims dims(128, 64, 32);
  const NoiseProfile noise = NoiseProfile::from_snr_db(0.0, 0.0);
  const int trials = 100;
  const MonteCarloEstimate est = estimate_ergodic_rate(
      dims, noise, SchemeSpec::srzf(tuned.lambda_star, tuned.theta_star), trials, 21);
  const double per_trial_sd = est.std_error * std::sqrt(static_cast<double>(trials));
  CHECK(per_trial_sd < 0.1);
}

TEST_CASE("gap to the asymptote shrinks as M grows") {
  const TunedParams tuned = tune_srzf({0.5, 0.25, 1.0, 1.0});
  const SchemeSpec spec = SchemeSpec::srzf(tuned.lambda_star, tuned.theta_star);
  const NoiseProfile noise = NoiseProfile::from_snr_db(0.0, 0.0);

  double prev_gap = 0.0, prev_se = 0.0;
  bool first = true;
  for (const int M : {32, 64, 128}) {
    const int trials = M == 128 ? 150 : 400;
    const MonteCarloEstimate est = estimate_ergodic_rate(
        SystemDims(M, M / 2, M / 4), noise, spec, trials, 77);
    const double gap = std::abs(est.mean - tuned.rate_star);
    if (!first) {
      CHECK(gap <= prev_gap + 2.0 * (prev_se + est.std_error));
    }
    prev_gap = gap;
    prev_se = est.std_error;
    first = false;
  }
}

TEST_CASE("trial count validation") {
  const SystemDims dims(4, 2, 0);
  const NoiseProfile noise(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(estimate_ergodic_rate(dims, noise, SchemeSpec::rzf(1.0), 0, 1), InputError);
}

}  // TEST_SUITE
