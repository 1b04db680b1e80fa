#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wavepack/analytic/autocorrelation.hpp"

namespace wavepack::analysis {

using analytic::AutocorrSample;

struct AutocorrSeries {
  std::vector<AutocorrSample> samples;
  bool has_anticorrelation = false;

  std::size_t size() const noexcept { return samples.size(); }
};

/// Sampler returning A(t) (and optionally Abar(t)). Samplers that track a
/// square-root branch are stateful, which is why they are called in t order.
using Sampler = std::function<AutocorrSample(double)>;

/// Evaluates `sampler` along a strictly increasing t grid. Modulus and Hilbert
/// distance are recomputed from A so every row is self-consistent.
AutocorrSeries assemble_series(const Sampler& sampler, std::span<const double> t_grid);

/// n points evenly spaced on [0, t_max]; n = 1 gives {0}.
std::vector<double> uniform_times(double t_max, std::size_t n);

}  // namespace wavepack::analysis
