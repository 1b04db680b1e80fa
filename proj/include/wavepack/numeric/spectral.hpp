#pragma once

#include <vector>

#include "wavepack/core/grid.hpp"
#include "wavepack/core/params.hpp"

namespace wavepack::numeric {

/// Harmonic-oscillator eigenbasis expansion psi(x,0) = sum_n a_n u_n(x).
struct SpectralExpansion {
  std::vector<cplx> coefficients;
  std::vector<double> energies;  // (n + 1/2) hbar omega
  int n0 = 0;                    // index nearest the centroid sum n |a_n|^2
  double Omega0 = 0.0;           // E(n0) / hbar
  double hbar = 1.0;
  double omega = 1.0;

  double weight() const;  // sum |a_n|^2
};

/// Normalized oscillator eigenfunctions u_0(x) .. u_{n_max}(x) with length
/// scale beta0, generated by the three-term recurrence on the weighted functions.
std::vector<double> hermite_functions(double x, double beta0, int n_max);

/// a_n = integral u_n(x) psi0(x) dx. Throws TruncationError when
/// ||psi0||^2 - sum |a_n|^2 exceeds tail_tolerance.
SpectralExpansion expand_in_oscillator_basis(const Wavefunction& psi0, double omega, int n_max,
                                             const PhysicalConstants& constants, double tail_tolerance = 1e-10);

/// A(t) = sum |a_n|^2 exp(+i E_n t / hbar).
cplx autocorr_from_spectrum(const SpectralExpansion& expansion, double t);

/// Abar(t) = sum (-1)^n |a_n|^2 exp(+i E_n t / hbar), using u_n(-x) = (-1)^n u_n(x).
cplx anticorr_from_spectrum(const SpectralExpansion& expansion, double t);

}  // namespace wavepack::numeric
