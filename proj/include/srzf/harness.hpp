#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srzf/montecarlo.hpp"
#include "srzf/tuning.hpp"

namespace srzf {

enum class SweepVariable { AlphaO, MuODb };
enum class TuningMode { FixedParams, Optimized };

/// Regularizers used when tuning is FixedParams.
struct FixedPrecoderParams {
  double lambda = 1.0;
  double theta = 1.0;
  double zeta = 1.0;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::MuODb;
  std::vector<double> values;  // non-empty, strictly increasing

  int M = 128;
  double alpha_l = 0.5;
  double mu_l_db = 0.0;
  double alpha_o = 0.25;  // fixed side when sweeping mu_o_db
  double mu_o_db = 0.0;   // fixed side when sweeping alpha_o

  int trials = 0;  // 0 = asymptotics only
  std::uint64_t master_seed = 1;
  std::vector<Scheme> schemes = {Scheme::Rzf, Scheme::Srzf};
  TuningMode tuning = TuningMode::FixedParams;
  FixedPrecoderParams fixed_params{};
  GridConfig grid{};
};

/// One CSV row. rate_simulated/std_error/trials are populated iff a
/// Monte Carlo run was requested (trials > 0).
struct ResultRow {
  std::string sweep_variable;
  double sweep_value;
  std::string scheme;
  double lambda;
  double theta;
  double rate_asymptotic;
  std::optional<double> rate_simulated;
  std::optional<double> std_error;
  std::optional<int> trials;
  std::uint64_t seed;
};

/// Evaluates a single operating point: asymptotic rate at the given (or
/// tuned) parameters plus, when trials > 0, the Monte Carlo estimate.
ResultRow run_point(const SystemDims& dims, const NoiseProfile& noise, const SchemeSpec& spec,
                    TuningMode mode, int trials, std::uint64_t seed,
                    const GridConfig& grid = {});

/// One row per (sweep value x scheme), emitted in sweep order. Non-integral
/// K or J at a point that samples channels aborts with the value named.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

/// As above, additionally writing the rows as CSV to the given path.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const std::string& csv_path);

extern const char* const kCsvHeader;

/// Doubles are written in shortest round-trip decimal form, so parsing the
/// file back reproduces the rows bit for bit.
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path);

std::vector<ResultRow> read_csv(std::istream& in);
std::vector<ResultRow> read_csv_file(const std::string& path);

}  // namespace srzf
