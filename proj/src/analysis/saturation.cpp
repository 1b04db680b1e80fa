#include "wavepack/analysis/saturation.hpp"

#include <cmath>
#include <string>

#include "wavepack/analytic/autocorrelation.hpp"

namespace wavepack::analysis {

namespace {

void require_saturating(const SystemSpec& system, const PacketParams& params) {
  switch (system.kind()) {
    case SystemKind::FreeParticle: return;
    case SystemKind::Inverted: {
      const double b0 = oscillator_length(system.omega_tilde(), params.constants());
      if (std::abs(params.beta() * params.beta() / (b0 * b0) - 1.0) > analytic::kMinimumUncertaintyTolerance)
        throw UnsupportedCaseError(Unsupported::NoClosedForm,
                                   "inverted-oscillator saturation law is known for beta = beta0 only");
      return;
    }
    case SystemKind::UniformAcceleration:
      throw UnsupportedCaseError(Unsupported::SaturationLaw,
                                 "uniform acceleration: the dynamical suppression never saturates");
    case SystemKind::Harmonic:
      throw UnsupportedCaseError(Unsupported::SaturationLaw, "harmonic oscillator: A(t) is periodic");
  }
}

}  // namespace

double saturation_asymptote(const SystemSpec& system, const PacketParams& p) {
  require_saturating(system, p);
  if (system.kind() == SystemKind::FreeParticle) {
    const double dp = p.delta_p0();
    return std::exp(-p.p0() * p.p0() / (dp * dp));
  }
  const double w = system.omega_tilde();
  const double b0 = oscillator_length(w, p.constants());
  return 2.0 * std::exp(-p.p0() * p.p0() / (p.mass() * w * p.hbar())) * std::exp(-p.x0() * p.x0() / (b0 * b0));
}

double saturation_time_factor(const SystemSpec& system, const PacketParams& p, double t) {
  require_saturating(system, p);
  if (system.kind() == SystemKind::FreeParticle) return 2.0 * p.spreading_time() / t;
  return std::exp(-system.omega_tilde() * t);
}

}  // namespace wavepack::analysis
