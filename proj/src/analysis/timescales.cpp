#include "wavepack/analysis/timescales.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavepack::analysis {

TimescaleReport timescales(std::span<const double> energies, int n0, double hbar) {
  if (n0 < 1 || static_cast<std::size_t>(n0) + 1 >= energies.size())
    throw std::out_of_range("timescales: n0 = " + std::to_string(n0) + " needs neighbours on both sides in a spectrum of " +
                            std::to_string(energies.size()) + " levels");
  const auto n = static_cast<std::size_t>(n0);
  const double lo = energies[n - 1], mid = energies[n], hi = energies[n + 1];
  const double d1 = 0.5 * (hi - lo);
  const double d2 = hi - 2.0 * mid + lo;
  const double inf = std::numeric_limits<double>::infinity();
  const double two_pi_hbar = 2.0 * std::numbers::pi * hbar;
  // Below this the second difference is rounding noise (SHO: 1e-12 hbar omega).
  const double eps = std::numeric_limits<double>::epsilon();
  const double magnitude = std::max({std::abs(lo), std::abs(mid), std::abs(hi)});
  const double curvature_floor = std::max(1e-12 * std::abs(d1), 8.0 * eps * magnitude);

  TimescaleReport report{};
  report.n0 = n0;
  report.Omega0 = mid / hbar;
  report.classical_infinite = std::abs(d1) <= 8.0 * eps * magnitude;
  report.T_cl = report.classical_infinite ? inf : two_pi_hbar / std::abs(d1);
  report.revival_infinite = std::abs(d2) <= curvature_floor;
  report.T_rev = report.revival_infinite ? inf : two_pi_hbar / (0.5 * std::abs(d2));
  return report;
}

}  // namespace wavepack::analysis
