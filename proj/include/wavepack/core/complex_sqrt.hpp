#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "wavepack/core/errors.hpp"

namespace wavepack {

/// Square root of z. Without `previous_root` this is the principal root with
/// argument in (-pi/2, pi/2]; with it, the root nearer to `previous_root`.
/// Throws std::domain_error for z == 0.
cplx continuous_sqrt(cplx z, std::optional<cplx> previous_root = std::nullopt);

/// Follows sqrt(z(t)) continuously along a path in t, starting from the
/// principal root at `t_start`. Steps are subdivided until the argument of z
/// turns by at most pi/4 per step; `max_step` bounds a single step so that a
/// path returning to its start after a full turn cannot be skipped over.
class TrackedSqrt {
 public:
  using Path = std::function<cplx(double)>;

  explicit TrackedSqrt(Path path, double t_start = 0.0,
                       double max_step = std::numeric_limits<double>::infinity());

  /// Root at t, reached by walking from the current position.
  cplx at(double t);
  double position() const noexcept { return t_; }

 private:
  Path path_;
  double max_step_;
  double t_;
  cplx z_;
  cplx root_;
};

}  // namespace wavepack
