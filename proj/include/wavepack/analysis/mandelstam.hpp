#pragma once

#include <vector>

#include "wavepack/analysis/series.hpp"
#include "wavepack/core/params.hpp"

namespace wavepack::analysis {

/// Free-particle check of |A(t)|^2 >= cos^2(Delta H t / hbar) on [0, pi hbar / 2 Delta H].
struct BoundReport {
  std::vector<double> t_grid;  // samples of the series inside the horizon
  std::vector<double> lhs;     // |A|^2
  std::vector<double> rhs;     // cos^2(Delta H t / hbar)
  double valid_horizon = 0.0;  // pi hbar / (2 Delta H)
  double min_margin = 0.0;     // min(lhs - rhs)
  bool horizon_truncated = false;

  // Short-time fits of both sides on [0, t0/100]: |A|^2 = 1 - c2 t^2 - c4 t^4 + ...
  double lhs_t2_coefficient = 0.0;
  double rhs_t2_coefficient = 0.0;
  double t2_relative_difference = 0.0;
  double t4_margin = 0.0;  // t^4 coefficient of lhs minus that of rhs

  bool holds(double margin_tolerance = 1e-10, double coefficient_tolerance = 1e-4) const;
};

/// `series` must be the free-particle autocorrelation of `params`.
BoundReport mandelstam_check(const PacketParams& params, const AutocorrSeries& series, int fit_points = 201);

}  // namespace wavepack::analysis
