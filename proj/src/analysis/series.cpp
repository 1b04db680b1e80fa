#include "wavepack/analysis/series.hpp"

#include <string>

namespace wavepack::analysis {

AutocorrSeries assemble_series(const Sampler& sampler, std::span<const double> t_grid) {
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1]))
      throw ConfigurationError("time grid must be strictly increasing (violated at index " + std::to_string(k) + ")");
  AutocorrSeries series;
  series.samples.reserve(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const AutocorrSample raw = sampler(t_grid[k]);
    if (k == 0) series.has_anticorrelation = raw.A_bar.has_value();
    if (raw.A_bar.has_value() != series.has_anticorrelation)
      throw ConfigurationError("sampler returned anticorrelation for only part of the series");
    series.samples.push_back(AutocorrSample::make(t_grid[k], raw.A, raw.A_bar));
  }
  return series;
}

std::vector<double> uniform_times(double t_max, std::size_t n) {
  if (n == 0) throw ConfigurationError("a series needs at least one sample");
  if (n == 1) return {0.0};
  if (!(t_max > 0.0)) throw ConfigurationError("t_max must be > 0 for more than one sample");
  std::vector<double> ts(n);
  for (std::size_t k = 0; k < n; ++k) ts[k] = t_max * static_cast<double>(k) / static_cast<double>(n - 1);
  ts.back() = t_max;
  return ts;
}

}  // namespace wavepack::analysis
