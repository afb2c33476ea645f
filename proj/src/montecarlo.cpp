#include "srzf/montecarlo.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "srzf/errors.hpp"
#include "srzf/metrics.hpp"

namespace srzf {

namespace {

struct TrialResult {
  double rate;
  double power_rel_error;
};

TrialResult run_trial(const SystemDims& dims, const NoiseProfile& noise,
                      const SchemeSpec& spec, const RandomStream& stream) {
  const ChannelRealization ch = sample_channel(dims, stream);
  const Eigen::MatrixXcd A = std::visit(
      [&](const auto& p) -> Eigen::MatrixXcd {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, RzfParams>) {
          return rzf_shaping_matrix(ch.H, p);
        } else {
          return srzf_shaping_matrix(ch.H, ch.G, p);
        }
      },
      spec.params);
  const PrecoderOutput pre = normalize_power(A, noise.P, dims.M);

  const RatePoint rates = secrecy_rates(per_user_sinr(ch.H, pre.W, noise.sigma2),
                                        per_user_esnr(ch.G, pre.W, noise.rho2));

  const double target = static_cast<double>(dims.M) * noise.P;
  const double rel = std::abs(pre.W.squaredNorm() - target) / std::max(target, 1e-300);
  return {average_rate(rates.rate), rel};
}

// Index-order reduction: bit-identical regardless of how trials were scheduled.
MonteCarloEstimate reduce(const std::vector<TrialResult>& results) {
  const int n = static_cast<int>(results.size());
  double sum = 0.0;
  double max_rel = 0.0;
  for (const TrialResult& r : results) {
    sum += r.rate;
    max_rel = std::max(max_rel, r.power_rel_error);
  }
  const double mean = sum / n;

  double std_error = 0.0;
  if (n > 1) {
    double ss = 0.0;
    for (const TrialResult& r : results) {
      const double d = r.rate - mean;
      ss += d * d;
    }
    std_error = std::sqrt(ss / (n - 1) / n);
  }
  return {mean, std_error, n, max_rel};
}

}  // namespace

MonteCarloEstimate estimate_ergodic_rate(const SystemDims& dims, const NoiseProfile& noise,
                                         const SchemeSpec& spec, int trials,
                                         std::uint64_t master_seed) {
  if (trials < 1) throw InputError("trials must be >= 1");

  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  const RandomStream root(master_seed);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < trials; ++t) {
    results[static_cast<std::size_t>(t)] =
        run_trial(dims, noise, spec, root.fork(static_cast<std::uint64_t>(t)));
  }
  return reduce(results);
}

MonteCarloEstimate estimate_ergodic_rate_serial(const SystemDims& dims,
                                                const NoiseProfile& noise,
                                                const SchemeSpec& spec, int trials,
                                                std::uint64_t master_seed) {
  if (trials < 1) throw InputError("trials must be >= 1");

  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  const RandomStream root(master_seed);
  for (int t = 0; t < trials; ++t) {
    results[static_cast<std::size_t>(t)] =
        run_trial(dims, noise, spec, root.fork(static_cast<std::uint64_t>(t)));
  }
  return reduce(results);
}

}  // namespace srzf
