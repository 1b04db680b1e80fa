#pragma once

#include <memory>
#include <span>

#include "wavepack/core/grid.hpp"

namespace wavepack::numeric {

/// Unnormalized in-place complex DFT of fixed length (FFTW backed).
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept;
  /// data_k <- sum_j data_j exp(-2 pi i jk / n)
  void forward(std::span<cplx> data) const;
  /// data_j <- sum_k data_k exp(+2 pi i jk / n)
  void backward(std::span<cplx> data) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Discrete version of
///   psi(x) = (2 pi hbar)^(-1/2) integral exp(i p x / hbar) phi(p) dp
/// and its inverse between a periodic position grid [x_min, x_min + N dx) and
/// the centered momentum grid p_k = (k - N/2) dp, dp = 2 pi hbar / (N dx).
/// Grid offsets are folded into phase factors, so sampled analytic pairs map
/// onto each other pointwise.
class FourierPair {
 public:
  FourierPair(const Grid& position_grid, double hbar);

  const Grid& position_grid() const noexcept { return position_; }
  const Grid& momentum_grid() const noexcept { return momentum_; }

  Wavefunction to_momentum(const Wavefunction& psi) const;
  Wavefunction to_position(const Wavefunction& phi) const;

 private:
  Grid position_;
  Grid momentum_;
  double hbar_;
  FftPlan plan_;
  std::vector<cplx> pre_forward_, post_forward_, pre_backward_, post_backward_;
};

Wavefunction to_momentum(const Wavefunction& psi, double hbar = 1.0);
/// Inverse transform onto `position_grid`, which must be the grid the momentum
/// samples were produced from.
Wavefunction to_position(const Wavefunction& phi, const Grid& position_grid, double hbar = 1.0);

/// Periodic momentum grid conjugate to a periodic position grid.
Grid conjugate_momentum_grid(const Grid& position_grid, double hbar);

}  // namespace wavepack::numeric
