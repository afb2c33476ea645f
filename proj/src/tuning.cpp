#include "srzf/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "srzf/errors.hpp"

namespace srzf {

namespace {

void validate_grid(const GridConfig& grid) {
  if (!(grid.lambda_lo > 0.0 && grid.lambda_lo < grid.lambda_hi)) {
    throw ParameterError("invalid lambda range");
  }
  if (!(grid.theta_lo > 0.0 && grid.theta_lo < grid.theta_hi)) {
    throw ParameterError("invalid theta range");
  }
  if (grid.points_per_axis < 2) throw ParameterError("points_per_axis must be >= 2");
  if (grid.refine_iterations < 0) throw ParameterError("refine_iterations must be >= 0");
}

void validate_scenario(const Scenario& sc) {
  if (sc.alpha_l <= 0.0) throw ParameterError("alpha_l must be > 0");
  if (sc.alpha_o < 0.0 || sc.mu_l < 0.0 || sc.mu_o < 0.0) {
    throw ParameterError("loads and SNRs must be >= 0");
  }
}

std::vector<double> log_space(double lo, double hi, int n) {
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
  }
  return out;
}

double rate_at(const Scenario& sc, double lambda, double theta) {
  return asymptotic_rate({sc.alpha_l, sc.alpha_o, theta, lambda, sc.mu_l, sc.mu_o}).rate;
}

struct Incumbent {
  double rate = -1.0;
  double lambda = 0.0;
  double theta = 0.0;
};

// Evaluates the full (lambda, theta) grid in parallel and scans the stored
// values serially in (lambda ascending, theta ascending) order, so the argmax
// and its tie-breaking are independent of the thread schedule.
void scan_grid(const Scenario& sc, const std::vector<double>& lam_axis,
               const std::vector<double>& th_axis, Incumbent& best, std::int64_t& evals) {
  const std::int64_t n_lam = static_cast<std::int64_t>(lam_axis.size());
  const std::int64_t n_th = static_cast<std::int64_t>(th_axis.size());
  std::vector<double> vals(static_cast<std::size_t>(n_lam * n_th));

#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < n_lam * n_th; ++idx) {
    vals[static_cast<std::size_t>(idx)] =
        rate_at(sc, lam_axis[static_cast<std::size_t>(idx / n_th)],
                th_axis[static_cast<std::size_t>(idx % n_th)]);
  }
  evals += n_lam * n_th;

  for (std::int64_t idx = 0; idx < n_lam * n_th; ++idx) {
    if (vals[static_cast<std::size_t>(idx)] > best.rate) {
      best.rate = vals[static_cast<std::size_t>(idx)];
      best.lambda = lam_axis[static_cast<std::size_t>(idx / n_th)];
      best.theta = th_axis[static_cast<std::size_t>(idx % n_th)];
    }
  }
}

// Shrunken log-axis of the original width / 10^round, centered on the
// incumbent but clamped into the original bounds.
std::vector<double> refined_axis(double center, double lo, double hi, double width, int n) {
  const double llo = std::min(std::max(std::log10(center) - width / 2, std::log10(lo)),
                              std::log10(hi) - width);
  return log_space(std::pow(10.0, llo), std::pow(10.0, llo + width), n);
}

std::vector<double> theta_axis_with_zero(std::vector<double> positive) {
  positive.insert(positive.begin(), 0.0);
  return positive;
}

}  // namespace

TunedParams tune_srzf(const Scenario& sc, const GridConfig& grid) {
  validate_scenario(sc);
  validate_grid(grid);

  const int n = grid.points_per_axis;
  double lam_width = std::log10(grid.lambda_hi) - std::log10(grid.lambda_lo);
  double th_width = std::log10(grid.theta_hi) - std::log10(grid.theta_lo);

  std::vector<double> lam_axis = log_space(grid.lambda_lo, grid.lambda_hi, n);
  std::vector<double> th_axis = theta_axis_with_zero(log_space(grid.theta_lo, grid.theta_hi, n));

  Incumbent best;
  std::int64_t evals = 0;
  for (int round = 0; round <= grid.refine_iterations; ++round) {
    scan_grid(sc, lam_axis, th_axis, best, evals);
    if (best.rate <= 0.0) {
      // Whole grid clipped: eavesdroppers dominate everywhere.
      return {Scheme::Srzf, lam_axis.front(), th_axis.front(), 0.0, evals, true};
    }
    if (round == grid.refine_iterations) break;

    lam_width /= 10.0;
    th_width /= 10.0;
    lam_axis = refined_axis(best.lambda, grid.lambda_lo, grid.lambda_hi, lam_width, n);
    if (best.theta == 0.0) {
      th_axis = theta_axis_with_zero(
          log_space(grid.theta_lo, grid.theta_lo * std::pow(10.0, th_width), n));
    } else {
      th_axis = theta_axis_with_zero(
          refined_axis(best.theta, grid.theta_lo, grid.theta_hi, th_width, n));
    }
  }
  return {Scheme::Srzf, best.lambda, best.theta, best.rate, evals, false};
}

TunedParams tune_rzf(const Scenario& sc, const GridConfig& grid) {
  validate_scenario(sc);
  validate_grid(grid);

  const int n = grid.points_per_axis;
  const std::vector<double> axis = log_space(grid.lambda_lo, grid.lambda_hi, n);
  std::vector<double> vals(axis.size());
  std::int64_t evals = 0;

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(axis.size()); ++i) {
    vals[static_cast<std::size_t>(i)] = rate_at(sc, axis[static_cast<std::size_t>(i)], 0.0);
  }
  evals += static_cast<std::int64_t>(axis.size());

  std::size_t arg = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i] > vals[arg]) arg = i;
  }
  Incumbent best{vals[arg], axis[arg], 0.0};
  if (best.rate <= 0.0) {
    return {Scheme::Rzf, axis.front(), 0.0, 0.0, evals, true};
  }

  // Golden-section polish in log10(zeta) on the bracket around the grid
  // argmax. The incumbent only ever improves, keeping refinement monotone.
  constexpr double kGolden = 0.6180339887498949;
  double a = std::log10(axis[arg == 0 ? 0 : arg - 1]);
  double b = std::log10(axis[std::min(axis.size() - 1, arg + 1)]);
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = rate_at(sc, std::pow(10.0, c), 0.0);
  double fd = rate_at(sc, std::pow(10.0, d), 0.0);
  evals += 2;
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = rate_at(sc, std::pow(10.0, d), 0.0);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = rate_at(sc, std::pow(10.0, c), 0.0);
    }
    ++evals;
    const double cand_rate = std::max(fc, fd);
    if (cand_rate > best.rate) {
      best.rate = cand_rate;
      best.lambda = std::pow(10.0, fc >= fd ? c : d);
    }
  }
  return {Scheme::Rzf, best.lambda, 0.0, best.rate, evals, false};
}

}  // namespace srzf
