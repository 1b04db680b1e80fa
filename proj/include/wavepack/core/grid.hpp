#pragma once

#include <cstddef>
#include <vector>

#include "wavepack/core/errors.hpp"

namespace wavepack {

enum class Space { Position, Momentum };

/// Closed grids include both endpoints and feed quadrature; periodic grids
/// exclude `max` (n_points intervals) and feed the Fourier transform pair.
enum class GridConvention { Closed, Periodic };

const char* to_string(Space space) noexcept;

class Grid {
 public:
  Grid(double min, double max, std::size_t n_points, Space space = Space::Position,
       GridConvention convention = GridConvention::Closed);

  static Grid closed(double min, double max, std::size_t n_points, Space space = Space::Position) {
    return Grid(min, max, n_points, space, GridConvention::Closed);
  }
  static Grid periodic(double min, double max, std::size_t n_points, Space space = Space::Position) {
    return Grid(min, max, n_points, space, GridConvention::Periodic);
  }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  std::size_t size() const noexcept { return n_points_; }
  Space space() const noexcept { return space_; }
  GridConvention convention() const noexcept { return convention_; }

  double spacing() const noexcept;
  double operator[](std::size_t j) const noexcept { return min_ + static_cast<double>(j) * spacing(); }
  std::vector<double> points() const;

  /// True when the sample set maps onto itself under x -> -x.
  bool is_symmetric() const noexcept;
  /// Index of the sample at -x_j; requires is_symmetric().
  std::size_t mirror_index(std::size_t j) const noexcept;

  bool operator==(const Grid& other) const noexcept = default;

 private:
  double min_;
  double max_;
  std::size_t n_points_;
  Space space_;
  GridConvention convention_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Complex samples of a state on a uniform grid at a given time.
struct Wavefunction {
  Grid grid;
  std::vector<cplx> samples;
  double time = 0.0;

  Wavefunction(Grid g, std::vector<cplx> s, double t = 0.0);
  Wavefunction(Grid g, double t = 0.0) : grid(g), samples(g.size()), time(t) {}
};

}  // namespace wavepack
