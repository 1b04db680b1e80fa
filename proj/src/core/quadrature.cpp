#include "wavepack/core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavepack {

std::vector<double> quadrature_weights(const Grid& grid) {
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  std::vector<double> w(n, h);
  if (grid.convention() == GridConvention::Periodic) return w;
  if (n % 2 == 1 && n >= 3) {
    for (std::size_t j = 1; j + 1 < n; ++j) w[j] = (j % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    w.front() = w.back() = h / 3.0;
  } else {
    w.front() = w.back() = 0.5 * h;
  }
  return w;
}

namespace {

template <typename T>
T weighted_sum(std::span<const T> values, const Grid& grid) {
  if (values.size() != grid.size()) throw ConfigurationError("integrand size does not match grid");
  const auto w = quadrature_weights(grid);
  T acc{};
  for (std::size_t j = 0; j < values.size(); ++j) acc += w[j] * values[j];
  return acc;
}

}  // namespace

double integrate(std::span<const double> values, const Grid& grid) { return weighted_sum(values, grid); }

cplx integrate(std::span<const cplx> values, const Grid& grid) { return weighted_sum(values, grid); }

void check_boundary(const Wavefunction& psi, double tolerance) {
  if (psi.samples.empty()) return;
  double peak = 0.0;
  for (const auto& v : psi.samples) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(psi.samples.front()), std::abs(psi.samples.back()));
  if (edge > tolerance * peak) {
    std::ostringstream msg;
    msg << "grid truncation: " << to_string(psi.grid.space()) << "-space edge magnitude " << edge
        << " exceeds " << tolerance << " x peak " << peak << " on [" << psi.grid.min() << ", "
        << psi.grid.max() << "]";
    throw GridTruncationError(msg.str(), edge);
  }
}

double norm_squared(const Wavefunction& psi, double tolerance) {
  check_boundary(psi, tolerance);
  std::vector<double> density(psi.samples.size());
  std::transform(psi.samples.begin(), psi.samples.end(), density.begin(),
                 [](cplx v) { return std::norm(v); });
  return integrate(std::span<const double>(density), psi.grid);
}

}  // namespace wavepack
