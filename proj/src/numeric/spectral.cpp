#include "wavepack/numeric/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wavepack/core/quadrature.hpp"

namespace wavepack::numeric {

double SpectralExpansion::weight() const {
  double total = 0.0;
  for (const auto& a : coefficients) total += std::norm(a);
  return total;
}

std::vector<double> hermite_functions(double x, double beta0, int n_max) {
  if (n_max < 0) throw ConfigurationError("n_max must be >= 0");
  std::vector<double> u(static_cast<std::size_t>(n_max) + 1);
  const double xi = x / beta0;
  u[0] = std::exp(-0.5 * xi * xi) / (std::pow(std::numbers::pi, 0.25) * std::sqrt(beta0));
  if (n_max >= 1) u[1] = std::sqrt(2.0) * xi * u[0];
  for (int n = 1; n < n_max; ++n) {
    const double dn = static_cast<double>(n);
    u[n + 1] = std::sqrt(2.0 / (dn + 1.0)) * xi * u[n] - std::sqrt(dn / (dn + 1.0)) * u[n - 1];
  }
  return u;
}

SpectralExpansion expand_in_oscillator_basis(const Wavefunction& psi0, double omega, int n_max,
                                             const PhysicalConstants& constants, double tail_tolerance) {
  constants.validate();
  if (psi0.grid.space() != Space::Position) throw ConfigurationError("expansion needs a position-space state");
  if (!(omega > 0.0)) throw ConfigurationError("omega must be > 0");
  const double norm = norm_squared(psi0);
  const double beta0 = oscillator_length(omega, constants);
  const auto w = quadrature_weights(psi0.grid);

  SpectralExpansion out;
  out.hbar = constants.hbar;
  out.omega = omega;
  out.coefficients.assign(static_cast<std::size_t>(n_max) + 1, cplx{});
  for (std::size_t j = 0; j < psi0.samples.size(); ++j) {
    const auto u = hermite_functions(psi0.grid[j], beta0, n_max);
    const cplx f = w[j] * psi0.samples[j];
    for (std::size_t n = 0; n < u.size(); ++n) out.coefficients[n] += u[n] * f;
  }

  const double captured = out.weight();
  if (norm - captured > tail_tolerance) {
    const int suggested = 2 * n_max + 1;
    std::ostringstream msg;
    msg << "oscillator expansion truncated: tail mass " << (norm - captured) << " exceeds " << tail_tolerance
        << " at n_max = " << n_max << "; try n_max = " << suggested;
    throw TruncationError(msg.str(), suggested);
  }

  double centroid = 0.0;
  out.energies.resize(out.coefficients.size());
  for (std::size_t n = 0; n < out.coefficients.size(); ++n) {
    out.energies[n] = (static_cast<double>(n) + 0.5) * constants.hbar * omega;
    centroid += static_cast<double>(n) * std::norm(out.coefficients[n]);
  }
  out.n0 = static_cast<int>(std::lround(centroid / captured));
  out.Omega0 = out.energies[static_cast<std::size_t>(out.n0)] / constants.hbar;
  return out;
}

namespace {

cplx spectral_sum(const SpectralExpansion& e, double t, bool alternate) {
  cplx acc{};
  for (std::size_t n = 0; n < e.coefficients.size(); ++n) {
    const double sign = (alternate && n % 2 == 1) ? -1.0 : 1.0;
    acc += sign * std::norm(e.coefficients[n]) * std::polar(1.0, e.energies[n] * t / e.hbar);
  }
  return acc;
}

}  // namespace

cplx autocorr_from_spectrum(const SpectralExpansion& expansion, double t) { return spectral_sum(expansion, t, false); }

cplx anticorr_from_spectrum(const SpectralExpansion& expansion, double t) { return spectral_sum(expansion, t, true); }

}  // namespace wavepack::numeric
