#pragma once

#include <span>

namespace wavepack::analysis {

struct TimescaleReport {
  double T_cl;    // 2 pi hbar / |E'(n0)|; +inf for a degenerate spectrum
  double T_rev;   // 2 pi hbar / (|E''(n0)| / 2); +inf for a linear spectrum
  bool classical_infinite = false;
  bool revival_infinite = false;
  int n0 = 0;
  double Omega0 = 0.0;  // E(n0) / hbar
};

/// Classical and revival periods from central differences of E_n around n0.
/// Throws std::out_of_range when n0 has no neighbour on either side.
TimescaleReport timescales(std::span<const double> energies, int n0, double hbar = 1.0);

}  // namespace wavepack::analysis
