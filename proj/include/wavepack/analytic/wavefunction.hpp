#pragma once

#include "wavepack/core/grid.hpp"
#include "wavepack/core/params.hpp"

namespace wavepack::analytic {

/// Width function and exponent of the oscillator propagator solution
///   psi(x,t) = exp(S / (2 beta L)) / sqrt(L sqrt(pi)).
/// For the harmonic oscillator L = beta cos(wt) + i (hbar / m w beta) sin(wt).
/// For the inverted oscillator L holds the hyperbolic continuation
///   B = beta cosh(wt) + i (hbar / m w beta) sinh(wt)
/// and S its continued exponent.
struct OscillatorKernel {
  cplx L;
  cplx S;
};

/// Requires a Harmonic or Inverted system.
OscillatorKernel oscillator_kernel(const SystemSpec& system, const PacketParams& params, double x, double t);

/// L(t) (harmonic) or B(t) (inverted).
cplx oscillator_width(const SystemSpec& system, const PacketParams& params, double t);

/// Closed-form psi(x,t) or phi(p,t) sampled on `grid`. Every system reduces at
/// t = 0 to the same initial Gaussian
///   psi(x,0) = (sqrt(pi) alpha hbar)^(-1/2) exp(i p0 (x - x0) / hbar) exp(-(x - x0)^2 / 2 (alpha hbar)^2).
/// Oscillator systems have no momentum-space closed form here: requesting one
/// throws UnsupportedCaseError(TransformRoute).
Wavefunction eval_wavefunction(const SystemSpec& system, const PacketParams& params, Space space,
                               const Grid& grid, double t);

}  // namespace wavepack::analytic
