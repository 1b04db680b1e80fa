#include "wavepack/analytic/autocorrelation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wavepack::analytic {

namespace {

constexpr cplx I{0.0, 1.0};

bool is_minimum_uncertainty(const PacketParams& p, double omega) {
  const double b0 = oscillator_length(omega, p.constants());
  return std::abs(p.beta() * p.beta() / (b0 * b0) - 1.0) <= kMinimumUncertaintyTolerance;
}

/// x0^2 / 2 beta0^2 + beta0^2 p0^2 / 2 hbar^2: the Poisson mean of the coherent state.
double coherent_weight(const PacketParams& p, double omega) {
  const double b0 = oscillator_length(omega, p.constants());
  return p.x0() * p.x0() / (2.0 * b0 * b0) + b0 * b0 * p.p0() * p.p0() / (2.0 * p.hbar() * p.hbar());
}

double harmonic_max_step(double omega) { return std::numbers::pi / (8.0 * omega); }

}  // namespace

AutocorrSample AutocorrSample::make(double t, cplx A, std::optional<cplx> A_bar) {
  return {t, A, A_bar, std::norm(A), 2.0 * (1.0 - A.real())};
}

ClosedFormCase classify(const SystemSpec& system, const PacketParams& p) {
  switch (system.kind()) {
    case SystemKind::FreeParticle: return ClosedFormCase::Free;
    case SystemKind::UniformAcceleration: return ClosedFormCase::Acceleration;
    case SystemKind::Harmonic:
      if (is_minimum_uncertainty(p, system.omega())) return ClosedFormCase::HarmonicMinimumUncertainty;
      if (p.x0() == 0.0 && p.p0() == 0.0) return ClosedFormCase::HarmonicCentered;
      throw UnsupportedCaseError(Unsupported::NoClosedForm,
                                 "harmonic A(t) has a closed form only for beta = beta0 or x0 = p0 = 0");
    case SystemKind::Inverted:
      if (is_minimum_uncertainty(p, system.omega_tilde()) && p.x0() == 0.0) return ClosedFormCase::InvertedCentered;
      throw UnsupportedCaseError(Unsupported::NoClosedForm,
                                 "inverted-oscillator A(t) has a closed form only for beta = beta0 and x0 = 0");
  }
  throw UnsupportedCaseError(Unsupported::NoClosedForm, "unknown system");
}

ClosedFormSampler::ClosedFormSampler(const SystemSpec& system, const PacketParams& params,
                                     bool with_anticorrelation)
    : system_(system), params_(params), case_(classify(system, params)),
      with_anticorrelation_(with_anticorrelation) {
  if (with_anticorrelation_ && case_ != ClosedFormCase::HarmonicMinimumUncertainty)
    throw UnsupportedCaseError(Unsupported::NoClosedForm,
                               "the anticorrelation closed form requires a harmonic packet with beta = beta0");
  switch (case_) {
    case ClosedFormCase::Free:
    case ClosedFormCase::Acceleration: {
      const double t0 = params_.spreading_time();
      root_.emplace([t0](double s) { return cplx(1.0, -s / (2.0 * t0)); });
      break;
    }
    case ClosedFormCase::HarmonicMinimumUncertainty: {
      const double w = system_.omega();
      root_.emplace([w](double s) { return cplx(std::cos(w * s), std::sin(w * s)); }, 0.0, harmonic_max_step(w));
      break;
    }
    case ClosedFormCase::HarmonicCentered: {
      const double w = system_.omega();
      const double r = derived_scales(system_, params_).r.value();
      const double c = r + 1.0 / r;
      root_.emplace([w, c](double s) { return 2.0 / cplx(2.0 * std::cos(w * s), -c * std::sin(w * s)); }, 0.0,
                    harmonic_max_step(w));
      break;
    }
    case ClosedFormCase::InvertedCentered:
      break;
  }
}

cplx ClosedFormSampler::autocorrelation(double t) {
  const double hbar = params_.hbar(), m = params_.mass();
  switch (case_) {
    case ClosedFormCase::Free:
    case ClosedFormCase::Acceleration: {
      const double F = case_ == ClosedFormCase::Acceleration ? system_.force() : 0.0;
      const double t0 = params_.spreading_time();
      const double u = t / (2.0 * t0);
      const double a = params_.alpha(), p0 = params_.p0();
      const cplx denom(1.0, -u);
      const cplx exponent = (2.0 * I * p0 * p0 * t / (m * hbar) - (a * F * t) * (a * F * t) * (1.0 + u * u)) /
                            (4.0 * denom);
      const cplx phase = std::exp(-I * F * t * (params_.x0() - F * t * t / (6.0 * m)) / hbar);
      return std::exp(exponent) * phase / root_->at(t);
    }
    case ClosedFormCase::HarmonicMinimumUncertainty: {
      const double w = system_.omega();
      const double K = coherent_weight(params_, w);
      return root_->at(t) * std::exp(-K * cplx(1.0 - std::cos(w * t), -std::sin(w * t)));
    }
    case ClosedFormCase::HarmonicCentered:
      return root_->at(t);
    case ClosedFormCase::InvertedCentered: {
      const double w = system_.omega_tilde();
      const double C = std::cosh(w * t), S = std::sinh(w * t);
      const double p0 = params_.p0();
      const cplx bracket = cplx(C - 1.0, S * (2.0 * C - 1.0)) / (C * cplx(C, -S));
      return std::exp(p0 * p0 / (2.0 * m * w * hbar) * bracket) / std::sqrt(C);
    }
  }
  return {};
}

cplx ClosedFormSampler::anticorrelation(double t) {
  if (case_ != ClosedFormCase::HarmonicMinimumUncertainty)
    throw UnsupportedCaseError(Unsupported::NoClosedForm,
                               "the anticorrelation closed form requires a harmonic packet with beta = beta0");
  const double w = system_.omega();
  const double K = coherent_weight(params_, w);
  return root_->at(t) * std::exp(-K * cplx(1.0 + std::cos(w * t), std::sin(w * t)));
}

AutocorrSample ClosedFormSampler::operator()(double t) {
  const cplx A = autocorrelation(t);
  std::optional<cplx> A_bar;
  if (with_anticorrelation_) A_bar = anticorrelation(t);
  return AutocorrSample::make(t, A, A_bar);
}

AutocorrSample closed_form_autocorr(const SystemSpec& system, const PacketParams& params, double t) {
  ClosedFormSampler sampler(system, params);
  return sampler(t);
}

cplx closed_form_anticorr(const PacketParams& params, double omega, double t) {
  ClosedFormSampler sampler(SystemSpec::harmonic(omega), params, true);
  return sampler.anticorrelation(t);
}

double free_autocorr_modulus_sq(const PacketParams& p, double t) {
  const double u = t / (2.0 * p.spreading_time());
  const double u2 = u * u;
  const double a = p.alpha();
  return std::exp(-2.0 * a * a * p.p0() * p.p0() * u2 / (1.0 + u2)) / std::sqrt(1.0 + u2);
}

double acceleration_autocorr_modulus_sq(const PacketParams& p, double force, double t) {
  const double t0 = p.spreading_time();
  const double u = t / (2.0 * t0);
  const double u2 = u * u;
  const double a = p.alpha();
  const double effective_p0_sq = p.p0() * p.p0() + (force * t0) * (force * t0) * (1.0 + u2);
  return std::exp(-2.0 * a * a * effective_p0_sq * u2 / (1.0 + u2)) / std::sqrt(1.0 + u2);
}

}  // namespace wavepack::analytic
