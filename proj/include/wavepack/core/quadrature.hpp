#pragma once

#include <span>
#include <vector>

#include "wavepack/core/grid.hpp"

namespace wavepack {

/// Relative edge tolerance: |psi| at either end must not exceed this fraction of the peak.
inline constexpr double kDefaultBoundaryTolerance = 1e-12;

/// Weights of the composite rule used on `grid`: Simpson on closed grids with an
/// odd point count, trapezoid on other closed grids, and the plain rectangle sum
/// (the periodic trapezoid rule) on periodic grids.
std::vector<double> quadrature_weights(const Grid& grid);

double integrate(std::span<const double> values, const Grid& grid);
cplx integrate(std::span<const cplx> values, const Grid& grid);

/// Throws GridTruncationError when an end sample exceeds tolerance * peak.
void check_boundary(const Wavefunction& psi, double tolerance = kDefaultBoundaryTolerance);

/// Integral of |psi|^2 over the grid.
double norm_squared(const Wavefunction& psi, double tolerance = kDefaultBoundaryTolerance);

}  // namespace wavepack
