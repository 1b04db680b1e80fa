#include "wavepack/core/grid.hpp"

#include <cmath>
#include <string>

namespace wavepack {

const char* to_string(Space space) noexcept {
  return space == Space::Position ? "position" : "momentum";
}

Grid::Grid(double min, double max, std::size_t n_points, Space space, GridConvention convention)
    : min_(min), max_(max), n_points_(n_points), space_(space), convention_(convention) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min))
    throw ConfigurationError("grid bounds must be finite with max > min");
  if (n_points < 2) throw ConfigurationError("grid needs at least 2 points");
}

double Grid::spacing() const noexcept {
  const double intervals = convention_ == GridConvention::Closed ? static_cast<double>(n_points_ - 1)
                                                                 : static_cast<double>(n_points_);
  return (max_ - min_) / intervals;
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_points_);
  const double dx = spacing();
  for (std::size_t j = 0; j < n_points_; ++j) xs[j] = min_ + static_cast<double>(j) * dx;
  return xs;
}

bool Grid::is_symmetric() const noexcept {
  return std::abs(min_ + max_) <= 1e-12 * (max_ - min_);
}

std::size_t Grid::mirror_index(std::size_t j) const noexcept {
  if (convention_ == GridConvention::Closed) return n_points_ - 1 - j;
  return (n_points_ - j) % n_points_;
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Wavefunction::Wavefunction(Grid g, std::vector<cplx> s, double t)
    : grid(g), samples(std::move(s)), time(t) {
  if (samples.size() != grid.size())
    throw ConfigurationError("sample count " + std::to_string(samples.size()) +
                             " does not match grid size " + std::to_string(grid.size()));
}

}  // namespace wavepack
