#include "wavepack/numeric/overlap.hpp"

#include <cmath>

namespace wavepack::numeric {

namespace {

void require_same_grid(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid == b.grid))
    throw ConfigurationError("states live on different grids (space, bounds, size or convention differ)");
}

}  // namespace

cplx overlap(const Wavefunction& bra, const Wavefunction& ket, double tolerance) {
  require_same_grid(bra, ket);
  check_boundary(bra, tolerance);
  check_boundary(ket, tolerance);
  std::vector<cplx> integrand(bra.samples.size());
  for (std::size_t j = 0; j < integrand.size(); ++j) integrand[j] = std::conj(bra.samples[j]) * ket.samples[j];
  return integrate(std::span<const cplx>(integrand), bra.grid);
}

double distance_squared(const Wavefunction& a, const Wavefunction& b, double tolerance) {
  require_same_grid(a, b);
  check_boundary(a, tolerance);
  check_boundary(b, tolerance);
  std::vector<double> integrand(a.samples.size());
  for (std::size_t j = 0; j < integrand.size(); ++j) integrand[j] = std::norm(a.samples[j] - b.samples[j]);
  return integrate(std::span<const double>(integrand), a.grid);
}

double density_overlap(const Wavefunction& a, const Wavefunction& b, double tolerance) {
  require_same_grid(a, b);
  check_boundary(a, tolerance);
  check_boundary(b, tolerance);
  std::vector<double> integrand(a.samples.size());
  for (std::size_t j = 0; j < integrand.size(); ++j) integrand[j] = std::abs(a.samples[j]) * std::abs(b.samples[j]);
  return integrate(std::span<const double>(integrand), a.grid);
}

Wavefunction parity_reflect(const Wavefunction& psi) {
  if (!psi.grid.is_symmetric()) throw ConfigurationError("parity reflection needs a grid symmetric about 0");
  std::vector<cplx> out(psi.samples.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = psi.samples[psi.grid.mirror_index(j)];
  return Wavefunction(psi.grid, std::move(out), psi.time);
}

SampledMoments sampled_moments(const Wavefunction& psi, double tolerance) {
  check_boundary(psi, tolerance);
  const auto w = quadrature_weights(psi.grid);
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double rho = w[j] * std::norm(psi.samples[j]);
    n0 += rho;
    n1 += rho * psi.grid[j];
  }
  const double mean = n1 / n0;
  double n2 = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double d = psi.grid[j] - mean;
    n2 += w[j] * std::norm(psi.samples[j]) * d * d;
  }
  return {n0, mean, std::sqrt(n2 / n0)};
}

}  // namespace wavepack::numeric
