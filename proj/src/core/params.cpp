#include "wavepack/core/params.hpp"

#include <cmath>
#include <string>

namespace wavepack {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void PhysicalConstants::validate() const {
  if (!positive_finite(hbar)) throw ConfigurationError("hbar must be finite and > 0");
  if (!positive_finite(mass)) throw ConfigurationError("mass must be finite and > 0");
}

PacketParams::PacketParams(double alpha, double x0, double p0, PhysicalConstants constants)
    : alpha_(alpha), x0_(x0), p0_(p0), constants_(constants) {
  constants_.validate();
  if (!positive_finite(alpha)) throw ConfigurationError("alpha must be finite and > 0");
  if (!std::isfinite(x0) || !std::isfinite(p0)) throw ConfigurationError("x0 and p0 must be finite");
}

double PacketParams::delta_p0() const noexcept { return 1.0 / (alpha_ * std::sqrt(2.0)); }

double PacketParams::delta_x0() const noexcept { return beta() / std::sqrt(2.0); }

const char* to_string(SystemKind kind) noexcept {
  switch (kind) {
    case SystemKind::FreeParticle: return "free";
    case SystemKind::UniformAcceleration: return "acceleration";
    case SystemKind::Harmonic: return "harmonic";
    case SystemKind::Inverted: return "inverted";
  }
  return "unknown";
}

SystemSpec SystemSpec::uniform_acceleration(double force) {
  if (!std::isfinite(force)) throw ConfigurationError("force must be finite");
  return SystemSpec(SystemKind::UniformAcceleration, force);
}

SystemSpec SystemSpec::harmonic(double omega) {
  if (!positive_finite(omega)) throw ConfigurationError("omega must be finite and > 0");
  return SystemSpec(SystemKind::Harmonic, omega);
}

SystemSpec SystemSpec::inverted(double omega_tilde) {
  if (!positive_finite(omega_tilde)) throw ConfigurationError("omega_tilde must be finite and > 0");
  return SystemSpec(SystemKind::Inverted, omega_tilde);
}

double SystemSpec::force() const {
  if (kind_ != SystemKind::UniformAcceleration)
    throw ConfigurationError(std::string("force is not defined for system '") + to_string(kind_) + "'");
  return coupling_;
}

double SystemSpec::omega() const {
  if (kind_ != SystemKind::Harmonic)
    throw ConfigurationError(std::string("omega is not defined for system '") + to_string(kind_) + "'");
  return coupling_;
}

double SystemSpec::omega_tilde() const {
  if (kind_ != SystemKind::Inverted)
    throw ConfigurationError(std::string("omega_tilde is not defined for system '") + to_string(kind_) + "'");
  return coupling_;
}

double SystemSpec::potential(double x, double mass) const noexcept {
  switch (kind_) {
    case SystemKind::FreeParticle: return 0.0;
    case SystemKind::UniformAcceleration: return -coupling_ * x;
    case SystemKind::Harmonic: return 0.5 * mass * coupling_ * coupling_ * x * x;
    case SystemKind::Inverted: return -0.5 * mass * coupling_ * coupling_ * x * x;
  }
  return 0.0;
}

double oscillator_length(double omega, const PhysicalConstants& constants) {
  return std::sqrt(constants.hbar / (constants.mass * omega));
}

DerivedScales derived_scales(const SystemSpec& system, const PacketParams& params) {
  DerivedScales scales{params.spreading_time(), std::nullopt, std::nullopt};
  std::optional<double> w;
  if (system.kind() == SystemKind::Harmonic) w = system.omega();
  if (system.kind() == SystemKind::Inverted) w = system.omega_tilde();
  if (w) {
    const double b0 = oscillator_length(*w, params.constants());
    const double b = params.beta();
    scales.beta0 = b0;
    scales.r = (b0 * b0) / (b * b);
  }
  return scales;
}

}  // namespace wavepack
