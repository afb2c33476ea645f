#pragma once

#include <cstdint>
#include <variant>

#include "srzf/channel.hpp"
#include "srzf/precoding.hpp"

namespace srzf {

/// Which precoder to simulate, with its parameters. The variant makes an
/// inconsistent scheme/params pairing unrepresentable.
struct SchemeSpec {
  std::variant<RzfParams, SrzfParams> params;

  Scheme scheme() const {
    return std::holds_alternative<RzfParams>(params) ? Scheme::Rzf : Scheme::Srzf;
  }

  static SchemeSpec rzf(double zeta) { return {RzfParams{zeta}}; }
  static SchemeSpec srzf(double lambda, double theta) { return {SrzfParams{lambda, theta}}; }
};

struct MonteCarloEstimate {
  double mean;       // estimated average ergodic secrecy rate, bits
  double std_error;  // sample std dev / sqrt(trials); 0 when trials == 1
  int trials;
  // Worst relative deviation of tr(W W^H) from M*P seen across all trials;
  // diagnostic for the power-constraint check.
  double max_power_rel_error;
};

/// Averages the per-realization mean secrecy rate over independent channel
/// draws. Trial t uses the sub-stream fork(master_seed, t), and per-trial
/// results are reduced in index order, so the estimate is bit-identical for
/// fixed inputs under any thread count. Trials run OpenMP-parallel.
MonteCarloEstimate estimate_ergodic_rate(const SystemDims& dims, const NoiseProfile& noise,
                                         const SchemeSpec& spec, int trials,
                                         std::uint64_t master_seed);

/// Serial reference implementation; same math, no parallel loop. Kept for
/// testing the parallel path against and for benchmarking.
MonteCarloEstimate estimate_ergodic_rate_serial(const SystemDims& dims,
                                                const NoiseProfile& noise,
                                                const SchemeSpec& spec, int trials,
                                                std::uint64_t master_seed);

}  // namespace srzf
