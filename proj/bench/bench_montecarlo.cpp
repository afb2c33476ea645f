// Compares the serial reference Monte Carlo loop against the OpenMP-parallel
// one on identical workloads and verifies the estimates agree bit for bit.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "srzf/montecarlo.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-28s %8s %10s %10s %8s\n", "workload", "trials", "serial[s]", "openmp[s]",
              "speedup");

  for (const int M : {32, 64, 128}) {
    const srzf::SystemDims dims(M, M / 2, M / 4);
    const srzf::NoiseProfile noise = srzf::NoiseProfile::from_snr_db(0.0, 0.0);
    const srzf::SchemeSpec spec = srzf::SchemeSpec::srzf(0.4577, 2.131);

    const auto t0 = Clock::now();
    const auto serial = srzf::estimate_ergodic_rate_serial(dims, noise, spec, trials, 1);
    const double ts = seconds_since(t0);

    const auto t1 = Clock::now();
    const auto parallel = srzf::estimate_ergodic_rate(dims, noise, spec, trials, 1);
    const double tp = seconds_since(t1);

    if (serial.mean != parallel.mean || serial.std_error != parallel.std_error) {
      std::printf("MISMATCH at M=%d: serial and parallel estimates differ\n", M);
      return 1;
    }
    std::printf("M=%-4d K=%-4d J=%-4d srzf   %8d %10.3f %10.3f %7.2fx   (mean %.6f)\n", M,
                dims.K, dims.J, trials, ts, tp, ts / tp, parallel.mean);
  }
  return 0;
}
