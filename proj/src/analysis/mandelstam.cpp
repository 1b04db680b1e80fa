#include "wavepack/analysis/mandelstam.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wavepack/analytic/autocorrelation.hpp"
#include "wavepack/analytic/moments.hpp"

namespace wavepack::analysis {

namespace {

struct ShortTimeFit {
  double c2;
  double c4;
};

// Least squares of y(t) = c2 t^2 + c4 t^4 + c6 t^6 on the scaled variable s = (t / t_fit)^2.
ShortTimeFit fit_even_series(const std::vector<double>& ts, const std::vector<double>& ys, double t_fit) {
  const auto rows = static_cast<Eigen::Index>(ts.size());
  Eigen::MatrixXd V(rows, 3);
  Eigen::VectorXd y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double s = (ts[i] / t_fit) * (ts[i] / t_fit);
    V(i, 0) = s;
    V(i, 1) = s * s;
    V(i, 2) = s * s * s;
    y(i) = ys[i];
  }
  const Eigen::VectorXd c = V.colPivHouseholderQr().solve(y);
  return {c(0) / (t_fit * t_fit), c(1) / std::pow(t_fit, 4)};
}

}  // namespace

bool BoundReport::holds(double margin_tolerance, double coefficient_tolerance) const {
  return !horizon_truncated && min_margin >= -margin_tolerance && t2_relative_difference <= coefficient_tolerance &&
         t4_margin >= 0.0;
}

BoundReport mandelstam_check(const PacketParams& params, const AutocorrSeries& series, int fit_points) {
  const SystemSpec free = SystemSpec::free_particle();
  const double hbar = params.hbar();
  const double delta_H = analytic::energy_moments(free, params).delta_H;
  BoundReport report;
  report.valid_horizon = std::numbers::pi * hbar / (2.0 * delta_H);

  double margin = std::numeric_limits<double>::infinity();
  double last_t = -std::numeric_limits<double>::infinity();
  for (const auto& sample : series.samples) {
    last_t = std::max(last_t, sample.t);
    if (sample.t < 0.0 || sample.t > report.valid_horizon) continue;
    const double c = std::cos(delta_H * sample.t / hbar);
    report.t_grid.push_back(sample.t);
    report.lhs.push_back(sample.modulus_sq);
    report.rhs.push_back(c * c);
    margin = std::min(margin, sample.modulus_sq - c * c);
  }
  report.min_margin = report.t_grid.empty() ? 0.0 : margin;
  report.horizon_truncated = last_t < report.valid_horizon * (1.0 - 1e-12);

  const double t_fit = params.spreading_time() / 100.0;
  std::vector<double> ts, y_lhs, y_rhs;
  analytic::ClosedFormSampler sampler(free, params);
  for (int i = 1; i <= fit_points; ++i) {
    const double t = t_fit * static_cast<double>(i) / static_cast<double>(fit_points);
    const double s = std::sin(delta_H * t / hbar);
    ts.push_back(t);
    y_lhs.push_back(1.0 - sampler(t).modulus_sq);
    y_rhs.push_back(s * s);
  }
  const auto lhs_fit = fit_even_series(ts, y_lhs, t_fit);
  const auto rhs_fit = fit_even_series(ts, y_rhs, t_fit);
  report.lhs_t2_coefficient = lhs_fit.c2;
  report.rhs_t2_coefficient = rhs_fit.c2;
  report.t2_relative_difference = std::abs(lhs_fit.c2 - rhs_fit.c2) / std::abs(rhs_fit.c2);
  report.t4_margin = rhs_fit.c4 - lhs_fit.c4;
  return report;
}

}  // namespace wavepack::analysis
