#pragma once

#include <memory>
#include <optional>

#include "wavepack/core/complex_sqrt.hpp"
#include "wavepack/core/params.hpp"

namespace wavepack::analytic {

struct AutocorrSample {
  double t = 0.0;
  cplx A{1.0, 0.0};
  std::optional<cplx> A_bar;
  double modulus_sq = 1.0;
  double hilbert_distance = 0.0;  // ||psi_t - psi_0||^2 = 2 (1 - Re A)

  static AutocorrSample make(double t, cplx A, std::optional<cplx> A_bar = std::nullopt);
};

/// The parameter regimes with a closed-form A(t).
enum class ClosedFormCase {
  Free,
  Acceleration,
  HarmonicMinimumUncertainty,  // beta = beta0, any x0, p0
  HarmonicCentered,            // x0 = p0 = 0, any beta
  InvertedCentered,            // beta = beta0, x0 = 0
};

/// Relative tolerance used to decide beta == beta0.
inline constexpr double kMinimumUncertaintyTolerance = 1e-10;

/// Throws UnsupportedCaseError(NoClosedForm) outside the closed-form regimes.
ClosedFormCase classify(const SystemSpec& system, const PacketParams& params);

/// Evaluates the closed-form A(t) (and optionally the anticorrelation) along a
/// time series. Square-root prefactors are tracked continuously from t = 0, so
/// one sampler must be fed by a single worker; any order of t is accepted.
class ClosedFormSampler {
 public:
  ClosedFormSampler(const SystemSpec& system, const PacketParams& params, bool with_anticorrelation = false);

  AutocorrSample operator()(double t);
  cplx autocorrelation(double t);
  /// Requires the minimum-uncertainty harmonic case.
  cplx anticorrelation(double t);

  ClosedFormCase closed_form_case() const noexcept { return case_; }

 private:
  SystemSpec system_;
  PacketParams params_;
  ClosedFormCase case_;
  bool with_anticorrelation_;
  std::optional<TrackedSqrt> root_;
};

AutocorrSample closed_form_autocorr(const SystemSpec& system, const PacketParams& params, double t);

/// Abar(t) = integral psi*(-x,t) psi(x,0) dx for the minimum-uncertainty
/// oscillator packet: exp(i w t / 2) exp[-K (1 + exp(i w t))] with
/// K = x0^2 / 2 beta0^2 + beta0^2 p0^2 / 2 hbar^2.
cplx closed_form_anticorr(const PacketParams& params, double omega, double t);

/// |A(t)|^2 for the free particle.
double free_autocorr_modulus_sq(const PacketParams& params, double t);
/// |A(t)|^2 for constant force F.
double acceleration_autocorr_modulus_sq(const PacketParams& params, double force, double t);

}  // namespace wavepack::analytic
