#include "wavepack/analytic/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wavepack/core/complex_sqrt.hpp"

namespace wavepack::analytic {

namespace {

constexpr cplx I{0.0, 1.0};
const double kPi = std::numbers::pi;

struct Trig {
  double c;
  double s;
  double w;  // angular frequency
  bool hyperbolic;
};

Trig oscillator_trig(const SystemSpec& system, double t) {
  if (system.kind() == SystemKind::Harmonic) {
    const double w = system.omega();
    return {std::cos(w * t), std::sin(w * t), w, false};
  }
  if (system.kind() == SystemKind::Inverted) {
    const double w = system.omega_tilde();
    return {std::cosh(w * t), std::sinh(w * t), w, true};
  }
  throw ConfigurationError("oscillator kernel requires a harmonic or inverted system");
}

cplx width_from(const Trig& tr, const PacketParams& p) {
  const double b = p.beta();
  return b * tr.c + I * (p.hbar() / (p.mass() * tr.w * b)) * tr.s;
}

std::vector<cplx> free_like_position(const SystemSpec& system, const PacketParams& p, const Grid& grid,
                                     double t) {
  const double hbar = p.hbar(), m = p.mass(), b = p.beta(), t0 = p.spreading_time();
  const double F = system.kind() == SystemKind::UniformAcceleration ? system.force() : 0.0;
  TrackedSqrt spread([t0](double s) { return cplx(1.0, s / t0); });
  const cplx pre = 1.0 / (std::sqrt(std::sqrt(kPi) * b) * spread.at(t));
  const cplx denom = 2.0 * b * b * cplx(1.0, t / t0);
  const double center = p.x0() + p.p0() * t / m + F * t * t / (2.0 * m);
  const cplx global = std::exp(I * F * t * (p.x0() - F * t * t / (6.0 * m)) / hbar);
  std::vector<cplx> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid[j];
    const double dx = x - center;
    out[j] = pre * global * std::exp(I * (p.p0() + F * t) * (x - p.x0() - p.p0() * t / (2.0 * m)) / hbar) *
             std::exp(-dx * dx / denom);
  }
  return out;
}

std::vector<cplx> free_like_momentum(const SystemSpec& system, const PacketParams& p, const Grid& grid,
                                     double t) {
  const double hbar = p.hbar(), m = p.mass(), a = p.alpha();
  const double F = system.kind() == SystemKind::UniformAcceleration ? system.force() : 0.0;
  const double norm = std::sqrt(a / std::sqrt(kPi));
  std::vector<cplx> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double pp = grid[j];
    const double q = pp - F * t;
    // ((p - Ft)^3 - p^3) / (6 m F hbar), expanded so that F = 0 is regular.
    const double dynamic = (-3.0 * pp * pp * t + 3.0 * pp * F * t * t - F * F * t * t * t) / (6.0 * m * hbar);
    out[j] = norm * std::exp(-0.5 * a * a * (q - p.p0()) * (q - p.p0())) *
             std::exp(I * (-q * p.x0() / hbar + dynamic));
  }
  return out;
}

std::vector<cplx> oscillator_position(const SystemSpec& system, const PacketParams& p, const Grid& grid,
                                      double t) {
  const Trig at_t = oscillator_trig(system, t);
  // The width function circles the origin once per period in the harmonic case.
  const double max_step = at_t.hyperbolic ? std::numeric_limits<double>::infinity() : kPi / (8.0 * at_t.w);
  TrackedSqrt root([&](double s) { return oscillator_width(system, p, s); }, 0.0, max_step);
  const cplx sqrt_L = root.at(t);
  const cplx L = width_from(at_t, p);
  const cplx pre = 1.0 / (sqrt_L * std::sqrt(std::sqrt(kPi)));
  // Aligns the oscillator solution's global phase with the common initial Gaussian.
  const cplx align = std::exp(-I * p.p0() * p.x0() / p.hbar());
  const double b = p.beta();
  std::vector<cplx> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const cplx S = oscillator_kernel(system, p, grid[j], t).S;
    out[j] = align * pre * std::exp(S / (2.0 * b * L));
  }
  return out;
}

}  // namespace

cplx oscillator_width(const SystemSpec& system, const PacketParams& params, double t) {
  return width_from(oscillator_trig(system, t), params);
}

OscillatorKernel oscillator_kernel(const SystemSpec& system, const PacketParams& p, double x, double t) {
  const Trig tr = oscillator_trig(system, t);
  const double hbar = p.hbar(), m = p.mass(), b = p.beta(), w = tr.w;
  const double x0 = p.x0(), p0 = p.p0();
  // Harmonic: i m w beta^2 sin / hbar. Inverted (w -> i w~, sin -> i sinh): -i m w~ beta^2 sinh / hbar.
  const double chirp_sign = tr.hyperbolic ? -1.0 : 1.0;
  const cplx S = -x0 * x0 * tr.c + 2.0 * x * x0 -
                 x * x * (tr.c + chirp_sign * I * m * w * b * b * tr.s / hbar) -
                 2.0 * x0 * p0 * tr.s / (m * w) + 2.0 * I * b * b * p0 * x / hbar -
                 I * b * b * p0 * p0 * tr.s / (m * w * hbar);
  return {width_from(tr, p), S};
}

Wavefunction eval_wavefunction(const SystemSpec& system, const PacketParams& params, Space space,
                               const Grid& grid, double t) {
  if (grid.space() != space)
    throw ConfigurationError(std::string("grid is tagged ") + to_string(grid.space()) + " but " +
                             to_string(space) + "-space samples were requested");
  const bool oscillator = system.kind() == SystemKind::Harmonic || system.kind() == SystemKind::Inverted;
  if (oscillator && space == Space::Momentum)
    throw UnsupportedCaseError(Unsupported::TransformRoute,
                               std::string("no momentum-space closed form for the ") + to_string(system.kind()) +
                                   " system; transform the position-space state instead");
  std::vector<cplx> samples;
  if (oscillator)
    samples = oscillator_position(system, params, grid, t);
  else if (space == Space::Position)
    samples = free_like_position(system, params, grid, t);
  else
    samples = free_like_momentum(system, params, grid, t);
  return Wavefunction(grid, std::move(samples), t);
}

}  // namespace wavepack::analytic
