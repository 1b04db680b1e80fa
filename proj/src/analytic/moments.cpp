#include "wavepack/analytic/moments.hpp"

#include <cmath>
#include <string>

#include "wavepack/analytic/wavefunction.hpp"
#include "wavepack/core/errors.hpp"

namespace wavepack::analytic {

EnergyMoments energy_moments(const SystemSpec& system, const PacketParams& p) {
  if (system.kind() != SystemKind::FreeParticle)
    throw UnsupportedCaseError(Unsupported::EnergyMoments,
                               std::string("energy moments are only available for the free particle, not '") +
                                   to_string(system.kind()) + "'");
  const double a2 = p.alpha() * p.alpha();
  const double p2 = p.p0() * p.p0();
  const double k = 1.0 / (2.0 * p.mass());
  const double mean_H = k * (p2 + 1.0 / (2.0 * a2));
  const double mean_H2 = k * k * (p2 * p2 + 3.0 * p2 / a2 + 3.0 / (4.0 * a2 * a2));
  const double var_H = k * k * (2.0 / a2) * (p2 + 1.0 / (4.0 * a2));
  return {mean_H, mean_H2, std::sqrt(var_H)};
}

Observables moments(const SystemSpec& system, const PacketParams& p, double t) {
  const double m = p.mass();
  switch (system.kind()) {
    case SystemKind::FreeParticle:
    case SystemKind::UniformAcceleration: {
      const double F = system.kind() == SystemKind::UniformAcceleration ? system.force() : 0.0;
      const double tau = t / p.spreading_time();
      Observables obs{p.x0() + p.p0() * t / m + F * t * t / (2.0 * m), p.delta_x0() * std::sqrt(1.0 + tau * tau),
                      std::nullopt};
      if (system.kind() == SystemKind::FreeParticle) obs.energy = energy_moments(system, p);
      return obs;
    }
    case SystemKind::Harmonic: {
      const double w = system.omega();
      return {p.x0() * std::cos(w * t) + p.p0() * std::sin(w * t) / (m * w),
              std::abs(oscillator_width(system, p, t)) / std::sqrt(2.0), std::nullopt};
    }
    case SystemKind::Inverted: {
      const double w = system.omega_tilde();
      return {p.x0() * std::cosh(w * t) + p.p0() * std::sinh(w * t) / (m * w),
              std::abs(oscillator_width(system, p, t)) / std::sqrt(2.0), std::nullopt};
    }
  }
  return {};
}

}  // namespace wavepack::analytic
