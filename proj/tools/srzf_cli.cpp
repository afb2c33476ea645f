// Command-line front end: single operating points, mu_o / alpha_o sweeps, and
// standalone regularizer tuning, with CSV output for plotting.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "srzf/errors.hpp"
#include "srzf/harness.hpp"

namespace {

using namespace srzf;

struct CommonOpts {
  int m = 128;
  double alpha_l = 0.5;
  double alpha_o = 0.25;
  double mu_l_db = 0.0;
  double mu_o_db = 0.0;
  int trials = 0;
  std::uint64_t seed = 1;
  double lambda = 1.0;
  double theta = 1.0;
  double zeta = 1.0;
  bool optimized = false;
  std::string scheme = "both";
  std::string output;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, int default_trials) {
  o.trials = default_trials;
  cmd->add_option("--m", o.m, "Transmit antennas M")->capture_default_str();
  cmd->add_option("--alpha-l", o.alpha_l, "Legitimate channel load K/M")->capture_default_str();
  cmd->add_option("--alpha-o", o.alpha_o, "Overhearing channel load J/M")->capture_default_str();
  cmd->add_option("--mu-l-db", o.mu_l_db, "Receive SNR at legitimate users [dB]")
      ->capture_default_str();
  cmd->add_option("--mu-o-db", o.mu_o_db, "Receive SNR at eavesdroppers [dB]")
      ->capture_default_str();
  cmd->add_option("--trials", o.trials, "Monte Carlo trials (0 = asymptotics only)")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed for reproducible simulation")
      ->capture_default_str();
  cmd->add_option("--lambda", o.lambda, "Fixed SRZF regularizer")->capture_default_str();
  cmd->add_option("--theta", o.theta, "Fixed SRZF leakage weight")->capture_default_str();
  cmd->add_option("--zeta", o.zeta, "Fixed RZF regularizer")->capture_default_str();
  cmd->add_flag("--optimized", o.optimized, "Tune regularizers on the asymptotic rate");
  cmd->add_option("--scheme", o.scheme, "rzf, srzf, or both")
      ->check(CLI::IsMember({"rzf", "srzf", "both"}))
      ->capture_default_str();
  cmd->add_option("--output", o.output, "Write rows as CSV to this path");
}

std::vector<Scheme> parse_schemes(const std::string& s) {
  if (s == "rzf") return {Scheme::Rzf};
  if (s == "srzf") return {Scheme::Srzf};
  return {Scheme::Rzf, Scheme::Srzf};
}

std::vector<double> sweep_values(const std::vector<double>& explicit_values, double from,
                                 double to, double step) {
  if (!explicit_values.empty()) return explicit_values;
  if (step <= 0.0) throw InputError("--step must be > 0");
  std::vector<double> values;
  for (double v = from; v <= to + 1e-12 * step; v += step) values.push_back(v);
  if (values.empty()) throw InputError("empty sweep range");
  return values;
}

SweepSpec make_spec(const CommonOpts& o, SweepVariable variable, std::vector<double> values) {
  SweepSpec spec;
  spec.variable = variable;
  spec.values = std::move(values);
  spec.M = o.m;
  spec.alpha_l = o.alpha_l;
  spec.alpha_o = o.alpha_o;
  spec.mu_l_db = o.mu_l_db;
  spec.mu_o_db = o.mu_o_db;
  spec.trials = o.trials;
  spec.master_seed = o.seed;
  spec.schemes = parse_schemes(o.scheme);
  spec.tuning = o.optimized ? TuningMode::Optimized : TuningMode::FixedParams;
  spec.fixed_params = {o.lambda, o.theta, o.zeta};
  return spec;
}

void print_rows(const std::vector<ResultRow>& rows) {
  for (const ResultRow& row : rows) {
    std::printf("%s=%-8g %-4s lambda=%-10.6g theta=%-10.6g rate_asy=%.6f",
                row.sweep_variable.c_str(), row.sweep_value, row.scheme.c_str(), row.lambda,
                row.theta, row.rate_asymptotic);
    if (row.rate_simulated) {
      std::printf("  rate_sim=%.6f (+/-%.5f, %d trials)", *row.rate_simulated,
                  row.std_error.value_or(0.0), row.trials.value_or(0));
    }
    std::printf("\n");
  }
}

void emit(const std::vector<ResultRow>& rows, const std::string& output) {
  print_rows(rows);
  if (!output.empty()) {
    write_csv_file(rows, output);
    std::printf("wrote %zu rows to %s\n", rows.size(), output.c_str());
  }
}

int dispatch(const CLI::App& app, CLI::App* point_cmd, CLI::App* sweep_mu_cmd,
             CLI::App* sweep_alpha_cmd, CLI::App* tune_cmd, CommonOpts& point_o,
             CommonOpts& mu_o, CommonOpts& alpha_o, CommonOpts& tune_o,
             const std::vector<double>& mu_values, double mu_from, double mu_to, double mu_step,
             const std::vector<double>& alpha_values) {
  (void)app;
  if (point_cmd->parsed()) {
    SweepSpec spec = make_spec(point_o, SweepVariable::MuODb, {point_o.mu_o_db});
    emit(run_sweep(spec), point_o.output);
    return 0;
  }
  if (sweep_mu_cmd->parsed()) {
    SweepSpec spec = make_spec(mu_o, SweepVariable::MuODb,
                               sweep_values(mu_values, mu_from, mu_to, mu_step));
    emit(run_sweep(spec), mu_o.output);
    return 0;
  }
  if (sweep_alpha_cmd->parsed()) {
    if (alpha_values.empty()) throw InputError("sweep-alpha-o requires --values");
    SweepSpec spec = make_spec(alpha_o, SweepVariable::AlphaO, alpha_values);
    emit(run_sweep(spec), alpha_o.output);
    return 0;
  }
  if (tune_cmd->parsed()) {
    const Scenario sc{tune_o.alpha_l, tune_o.alpha_o, std::pow(10.0, tune_o.mu_l_db / 10.0),
                      std::pow(10.0, tune_o.mu_o_db / 10.0)};
    std::vector<ResultRow> rows;
    for (const Scheme scheme : parse_schemes(tune_o.scheme)) {
      const TunedParams t = scheme == Scheme::Rzf ? tune_rzf(sc) : tune_srzf(sc);
      std::printf("%-4s lambda*=%-12.8g theta*=%-12.8g rate*=%.8f bits (%lld evals%s)\n",
                  scheme_name(scheme), t.lambda_star, t.theta_star, t.rate_star,
                  static_cast<long long>(t.grid_evals), t.plateau ? ", plateau" : "");
      ResultRow row;
      row.sweep_variable = "mu_o_db";
      row.sweep_value = tune_o.mu_o_db;
      row.scheme = scheme_name(scheme);
      row.lambda = t.lambda_star;
      row.theta = t.theta_star;
      row.rate_asymptotic = t.rate_star;
      row.seed = tune_o.seed;
      rows.push_back(std::move(row));
    }
    if (!tune_o.output.empty()) {
      write_csv_file(rows, tune_o.output);
      std::printf("wrote %zu rows to %s\n", rows.size(), tune_o.output.c_str());
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Secure regularized zero-forcing precoding: exact finite-size secrecy rates by "
      "Monte Carlo, large-system limits, and regularizer tuning for MIMOME downlinks"};
  app.require_subcommand(1);

  CommonOpts point_o, mu_o, alpha_o, tune_o;
  std::vector<double> mu_values, alpha_values;
  double mu_from = -8.0, mu_to = 8.0, mu_step = 1.0;

  CLI::App* point_cmd = app.add_subcommand(
      "point", "Evaluate one operating point (asymptotic + optional simulation)");
  add_common_flags(point_cmd, point_o, 500);

  CLI::App* sweep_mu_cmd =
      app.add_subcommand("sweep-mu-o", "Sweep the eavesdropper receive SNR mu_o [dB]");
  add_common_flags(sweep_mu_cmd, mu_o, 0);
  sweep_mu_cmd->add_option("--values", mu_values, "Explicit sweep values [dB]")->delimiter(',');
  sweep_mu_cmd->add_option("--from", mu_from, "Sweep start [dB]")->capture_default_str();
  sweep_mu_cmd->add_option("--to", mu_to, "Sweep end [dB]")->capture_default_str();
  sweep_mu_cmd->add_option("--step", mu_step, "Sweep step [dB]")->capture_default_str();

  CLI::App* sweep_alpha_cmd =
      app.add_subcommand("sweep-alpha-o", "Sweep the overhearing channel load alpha_o");
  add_common_flags(sweep_alpha_cmd, alpha_o, 0);
  sweep_alpha_cmd->add_option("--values", alpha_values, "Explicit sweep values")
      ->delimiter(',');

  CLI::App* tune_cmd = app.add_subcommand(
      "tune", "Maximize the asymptotic secrecy rate over the regularizers");
  add_common_flags(tune_cmd, tune_o, 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(app, point_cmd, sweep_mu_cmd, sweep_alpha_cmd, tune_cmd, point_o, mu_o,
                    alpha_o, tune_o, mu_values, mu_from, mu_to, mu_step, alpha_values);
  } catch (const srzf::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const srzf::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
