#pragma once

#include "wavepack/core/grid.hpp"
#include "wavepack/core/quadrature.hpp"

namespace wavepack::numeric {

/// <bra|ket> by quadrature. Grids must be identical; both states must decay at
/// the edges to `tolerance` of their peaks.
cplx overlap(const Wavefunction& bra, const Wavefunction& ket, double tolerance = kDefaultBoundaryTolerance);

/// ||a - b||^2 by direct quadrature of |a - b|^2.
double distance_squared(const Wavefunction& a, const Wavefunction& b,
                        double tolerance = kDefaultBoundaryTolerance);

/// Integral of |a| |b|: overlap of magnitudes only.
double density_overlap(const Wavefunction& a, const Wavefunction& b,
                       double tolerance = kDefaultBoundaryTolerance);

/// psi(-x) on the same grid; requires a grid symmetric about the origin.
Wavefunction parity_reflect(const Wavefunction& psi);

struct SampledMoments {
  double norm_sq;
  double mean;
  double spread;
};

/// Normalized first and second moments of |psi|^2 in the grid variable.
SampledMoments sampled_moments(const Wavefunction& psi, double tolerance = kDefaultBoundaryTolerance);

}  // namespace wavepack::numeric
