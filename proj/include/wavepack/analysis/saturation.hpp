#pragma once

#include "wavepack/core/params.hpp"

namespace wavepack::analysis {

/// Constant C in the long-time law |A(t)|^2 -> C * saturation_time_factor(t):
///   free particle:      C = exp(-p0^2 / Delta p0^2),                       factor 2 t0 / t
///   inverted (beta0):   C = 2 exp(-p0^2 / m w~ hbar) exp(-x0^2 / beta0^2),  factor exp(-w~ t)
/// Acceleration and harmonic systems throw UnsupportedCaseError(SaturationLaw).
double saturation_asymptote(const SystemSpec& system, const PacketParams& params);

double saturation_time_factor(const SystemSpec& system, const PacketParams& params, double t);

}  // namespace wavepack::analysis
