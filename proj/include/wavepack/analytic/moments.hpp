#pragma once

#include <optional>

#include "wavepack/core/params.hpp"

namespace wavepack::analytic {

struct EnergyMoments {
  double mean_H;
  double mean_H2;
  double delta_H;
};

struct Observables {
  double mean_x;
  double spread_x;
  std::optional<EnergyMoments> energy;  // free particle only
};

/// <H>, <H^2> and Delta H of the free Gaussian. Other systems throw
/// UnsupportedCaseError(EnergyMoments).
EnergyMoments energy_moments(const SystemSpec& system, const PacketParams& params);

/// <x>_t and Delta x_t for any of the four systems; energy moments are attached
/// for the free particle.
Observables moments(const SystemSpec& system, const PacketParams& params, double t);

}  // namespace wavepack::analytic
