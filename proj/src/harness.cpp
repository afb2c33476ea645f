#include "srzf/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "srzf/errors.hpp"

namespace srzf {

const char* const kCsvHeader =
    "sweep_variable,sweep_value,scheme,lambda,theta,rate_asymptotic,rate_simulated,stderr,"
    "trials,seed";

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, const char* field) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw InputError(std::string("malformed CSV field '") + field + "': " + std::string(s));
  }
  return v;
}

struct PointInputs {
  std::string sweep_variable;
  double sweep_value;
  int M;
  double alpha_l;
  double alpha_o;
  double mu_l;
  double mu_o;
  Scheme scheme;
  TuningMode mode;
  FixedPrecoderParams fixed;
  int trials;
  std::uint64_t seed;
  GridConfig grid;
};

ResultRow evaluate_point(const PointInputs& in) {
  double lambda = 0.0;
  double theta = 0.0;
  if (in.mode == TuningMode::Optimized) {
    const Scenario sc{in.alpha_l, in.alpha_o, in.mu_l, in.mu_o};
    const TunedParams tuned =
        in.scheme == Scheme::Rzf ? tune_rzf(sc, in.grid) : tune_srzf(sc, in.grid);
    lambda = tuned.lambda_star;
    theta = tuned.theta_star;
  } else {
    lambda = in.scheme == Scheme::Rzf ? in.fixed.zeta : in.fixed.lambda;
    theta = in.scheme == Scheme::Rzf ? 0.0 : in.fixed.theta;
  }

  ResultRow row;
  row.sweep_variable = in.sweep_variable;
  row.sweep_value = in.sweep_value;
  row.scheme = scheme_name(in.scheme);
  row.lambda = lambda;
  row.theta = theta;
  row.rate_asymptotic =
      asymptotic_rate({in.alpha_l, in.alpha_o, theta, lambda, in.mu_l, in.mu_o}).rate;
  row.seed = in.seed;

  if (in.trials > 0) {
    const SystemDims dims = SystemDims::from_loads(in.M, in.alpha_l, in.alpha_o);
    const NoiseProfile noise(1.0 / in.mu_l, 1.0 / in.mu_o, 1.0);
    const SchemeSpec spec = in.scheme == Scheme::Rzf ? SchemeSpec::rzf(lambda)
                                                     : SchemeSpec::srzf(lambda, theta);
    const MonteCarloEstimate est = estimate_ergodic_rate(dims, noise, spec, in.trials, in.seed);
    row.rate_simulated = est.mean;
    row.std_error = est.std_error;
    row.trials = est.trials;
  }
  return row;
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw InputError("sweep values must be non-empty");
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    if (!(spec.values[i] > spec.values[i - 1])) {
      throw InputError("sweep values must be strictly increasing");
    }
  }
  if (spec.schemes.empty()) throw InputError("at least one scheme required");
  if (spec.M < 1) throw InputError("M must be >= 1");
  if (spec.trials < 0) throw InputError("trials must be >= 0");
}

}  // namespace

ResultRow run_point(const SystemDims& dims, const NoiseProfile& noise, const SchemeSpec& spec,
                    TuningMode mode, int trials, std::uint64_t seed, const GridConfig& grid) {
  FixedPrecoderParams fixed;
  if (const auto* rzf = std::get_if<RzfParams>(&spec.params)) {
    fixed.zeta = rzf->zeta;
  } else {
    const auto& srzf = std::get<SrzfParams>(spec.params);
    fixed.lambda = srzf.lambda;
    fixed.theta = srzf.theta;
  }
  return evaluate_point({"mu_o_db", 10.0 * std::log10(noise.mu_o()), dims.M, dims.alpha_l(),
                         dims.alpha_o(), noise.mu_l(), noise.mu_o(), spec.scheme(), mode,
                         fixed, trials, seed, grid});
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);

  const double mu_l = db_to_linear(spec.mu_l_db);
  std::vector<ResultRow> rows;
  rows.reserve(spec.values.size() * spec.schemes.size());
  for (const double value : spec.values) {
    for (const Scheme scheme : spec.schemes) {
      PointInputs in;
      in.M = spec.M;
      in.alpha_l = spec.alpha_l;
      in.mu_l = mu_l;
      in.scheme = scheme;
      in.mode = spec.tuning;
      in.fixed = spec.fixed_params;
      in.trials = spec.trials;
      in.seed = spec.master_seed;
      in.grid = spec.grid;
      in.sweep_value = value;
      if (spec.variable == SweepVariable::MuODb) {
        in.sweep_variable = "mu_o_db";
        in.alpha_o = spec.alpha_o;
        in.mu_o = db_to_linear(value);
      } else {
        in.sweep_variable = "alpha_o";
        in.alpha_o = value;
        in.mu_o = db_to_linear(spec.mu_o_db);
      }
      try {
        rows.push_back(evaluate_point(in));
      } catch (const InputError& e) {
        throw InputError("sweep value " + format_double(value) + ": " + e.what());
      } catch (const ParameterError& e) {
        throw ParameterError("sweep value " + format_double(value) + ": " + e.what());
      }
    }
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const std::string& csv_path) {
  std::vector<ResultRow> rows = run_sweep(spec);
  write_csv_file(rows, csv_path);
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ResultRow& row : rows) {
    out << row.sweep_variable << ',' << format_double(row.sweep_value) << ',' << row.scheme
        << ',' << format_double(row.lambda) << ',' << format_double(row.theta) << ','
        << format_double(row.rate_asymptotic) << ',';
    if (row.rate_simulated) out << format_double(*row.rate_simulated);
    out << ',';
    if (row.std_error) out << format_double(*row.std_error);
    out << ',';
    if (row.trials) out << *row.trials;
    out << ',' << row.seed << '\n';
  }
}

void write_csv_file(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  write_csv(rows, out);
  out.flush();
  if (!out.good()) throw IoError("write failed: " + path);
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InputError("missing or unexpected CSV header");
  }

  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 10) throw InputError("CSV row does not have 10 fields: " + line);

    ResultRow row;
    row.sweep_variable = fields[0];
    row.sweep_value = parse_double(fields[1], "sweep_value");
    row.scheme = fields[2];
    row.lambda = parse_double(fields[3], "lambda");
    row.theta = parse_double(fields[4], "theta");
    row.rate_asymptotic = parse_double(fields[5], "rate_asymptotic");
    if (!fields[6].empty()) row.rate_simulated = parse_double(fields[6], "rate_simulated");
    if (!fields[7].empty()) row.std_error = parse_double(fields[7], "stderr");
    if (!fields[8].empty()) row.trials = static_cast<int>(parse_double(fields[8], "trials"));
    row.seed = static_cast<std::uint64_t>(std::stoull(fields[9]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  return read_csv(in);
}

}  // namespace srzf
