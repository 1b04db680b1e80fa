#pragma once

#include <optional>

#include "wavepack/core/errors.hpp"

namespace wavepack {

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  /// Throws ConfigurationError unless both constants are finite and positive.
  void validate() const;
};

/// Initial Gaussian: alpha is the momentum-space width parameter (inverse momentum),
/// x0 and p0 are the initial expectation values of position and momentum.
class PacketParams {
 public:
  PacketParams(double alpha, double x0, double p0, PhysicalConstants constants = {});

  double alpha() const noexcept { return alpha_; }
  double x0() const noexcept { return x0_; }
  double p0() const noexcept { return p0_; }
  const PhysicalConstants& constants() const noexcept { return constants_; }
  double hbar() const noexcept { return constants_.hbar; }
  double mass() const noexcept { return constants_.mass; }

  /// Position width parameter beta = alpha * hbar.
  double beta() const noexcept { return alpha_ * constants_.hbar; }
  double delta_p0() const noexcept;
  double delta_x0() const noexcept;
  /// t0 = m hbar alpha^2.
  double spreading_time() const noexcept { return constants_.mass * constants_.hbar * alpha_ * alpha_; }

  PacketParams with_x0(double x0) const { return {alpha_, x0, p0_, constants_}; }
  PacketParams with_p0(double p0) const { return {alpha_, x0_, p0, constants_}; }
  PacketParams with_alpha(double alpha) const { return {alpha, x0_, p0_, constants_}; }

 private:
  double alpha_;
  double x0_;
  double p0_;
  PhysicalConstants constants_;
};

enum class SystemKind { FreeParticle, UniformAcceleration, Harmonic, Inverted };

const char* to_string(SystemKind kind) noexcept;

/// One of the four model Hamiltonians together with its coupling.
class SystemSpec {
 public:
  static SystemSpec free_particle() { return SystemSpec(SystemKind::FreeParticle, 0.0); }
  /// V(x) = -F x. F = 0 is allowed and reproduces the free particle.
  static SystemSpec uniform_acceleration(double force);
  /// V(x) = m omega^2 x^2 / 2.
  static SystemSpec harmonic(double omega);
  /// V(x) = -m omega_tilde^2 x^2 / 2.
  static SystemSpec inverted(double omega_tilde);

  SystemKind kind() const noexcept { return kind_; }
  double force() const;
  double omega() const;
  double omega_tilde() const;

  /// Potential energy at x.
  double potential(double x, double mass) const noexcept;

 private:
  SystemSpec(SystemKind kind, double coupling) : kind_(kind), coupling_(coupling) {}
  SystemKind kind_;
  double coupling_;
};

struct DerivedScales {
  double t0;
  std::optional<double> beta0;  // sqrt(hbar / m omega), oscillator systems only
  std::optional<double> r;      // beta0^2 / beta^2, oscillator systems only
};

DerivedScales derived_scales(const SystemSpec& system, const PacketParams& params);

/// Oscillator length sqrt(hbar / (m w)).
double oscillator_length(double omega, const PhysicalConstants& constants);

}  // namespace wavepack
