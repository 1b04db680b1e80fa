#include "wavepack/core/complex_sqrt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavepack {

cplx continuous_sqrt(cplx z, std::optional<cplx> previous_root) {
  if (z == cplx(0.0, 0.0)) throw std::domain_error("continuous_sqrt: square root of zero has no branch");
  // std::sqrt maps the negative real axis with imag = -0 to -i|z|^(1/2).
  cplx root = (z.imag() == 0.0 && z.real() < 0.0) ? cplx(0.0, std::sqrt(-z.real())) : std::sqrt(z);
  if (previous_root && std::abs(root - *previous_root) > std::abs(root + *previous_root)) root = -root;
  return root;
}

TrackedSqrt::TrackedSqrt(Path path, double t_start, double max_step)
    : path_(std::move(path)), max_step_(max_step), t_(t_start), z_(path_(t_start)),
      root_(continuous_sqrt(z_)) {
  if (!(max_step_ > 0.0)) throw ConfigurationError("TrackedSqrt: max_step must be > 0");
}

cplx TrackedSqrt::at(double t) {
  constexpr double kMaxTurn = std::numbers::pi / 4.0;
  constexpr int kMaxHalvings = 60;
  while (t_ != t) {
    const double remaining = t - t_;
    double h = std::abs(remaining) <= max_step_ ? remaining : std::copysign(max_step_, remaining);
    cplx z_next{};
    for (int halvings = 0;; ++halvings) {
      const double t_next = (h == remaining) ? t : t_ + h;
      z_next = path_(t_next);
      if (z_next == cplx(0.0, 0.0))
        throw std::domain_error("TrackedSqrt: path passes through zero");
      if (std::abs(std::arg(z_next / z_)) <= kMaxTurn) break;
      if (halvings == kMaxHalvings) throw std::domain_error("TrackedSqrt: path argument is discontinuous");
      h *= 0.5;
    }
    root_ = continuous_sqrt(z_next, root_);
    z_ = z_next;
    t_ = (h == remaining) ? t : t_ + h;
  }
  return root_;
}

}  // namespace wavepack
