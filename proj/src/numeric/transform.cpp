#include "wavepack/numeric/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <string>

namespace wavepack::numeric {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void require_transform_grid(const Grid& grid, Space space) {
  if (grid.space() != space)
    throw ConfigurationError(std::string("transform expected a ") + to_string(space) + "-space grid");
  if (grid.convention() != GridConvention::Periodic)
    throw ConfigurationError("transform requires a periodic grid");
  if (!is_power_of_two(grid.size()))
    throw ConfigurationError("transform requires a power-of-two grid size, got " + std::to_string(grid.size()));
}

}  // namespace

struct FftPlan::Impl {
  std::size_t n;
  fftw_complex* buffer;
  fftw_plan fwd;
  fftw_plan bwd;

  explicit Impl(std::size_t size) : n(size) {
    std::lock_guard lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buffer);
  }

  void run(fftw_plan plan, std::span<cplx> data) const {
    if (data.size() != n) throw ConfigurationError("FFT length mismatch");
    std::memcpy(buffer, data.data(), n * sizeof(fftw_complex));
    fftw_execute(plan);
    std::memcpy(static_cast<void*>(data.data()), buffer, n * sizeof(fftw_complex));
  }
};

FftPlan::FftPlan(std::size_t n) : impl_(std::make_unique<Impl>(n)) {}
FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

std::size_t FftPlan::size() const noexcept { return impl_->n; }
void FftPlan::forward(std::span<cplx> data) const { impl_->run(impl_->fwd, data); }
void FftPlan::backward(std::span<cplx> data) const { impl_->run(impl_->bwd, data); }

Grid conjugate_momentum_grid(const Grid& position_grid, double hbar) {
  require_transform_grid(position_grid, Space::Position);
  const double n = static_cast<double>(position_grid.size());
  const double dp = 2.0 * std::numbers::pi * hbar / (n * position_grid.spacing());
  return Grid::periodic(-0.5 * n * dp, 0.5 * n * dp, position_grid.size(), Space::Momentum);
}

FourierPair::FourierPair(const Grid& position_grid, double hbar)
    : position_(position_grid), momentum_(conjugate_momentum_grid(position_grid, hbar)), hbar_(hbar),
      plan_(position_grid.size()) {
  if (!(hbar > 0.0)) throw ConfigurationError("hbar must be > 0");
  const std::size_t n = position_.size();
  const double dx = position_.spacing(), dp = momentum_.spacing();
  const double x_min = position_.min(), p_min = momentum_.min();
  const double scale_fwd = dx / std::sqrt(2.0 * std::numbers::pi * hbar);
  const double scale_bwd = dp / std::sqrt(2.0 * std::numbers::pi * hbar);
  pre_forward_.resize(n);
  post_forward_.resize(n);
  pre_backward_.resize(n);
  post_backward_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double offset_x = static_cast<double>(j) * dx;  // x_j - x_min
    const double offset_p = static_cast<double>(j) * dp;  // p_j - p_min
    pre_forward_[j] = std::polar(1.0, -p_min * offset_x / hbar);
    post_forward_[j] = std::polar(scale_fwd, -momentum_[j] * x_min / hbar);
    pre_backward_[j] = std::polar(1.0, offset_p * x_min / hbar);
    post_backward_[j] = std::polar(scale_bwd, p_min * position_[j] / hbar);
  }
}

Wavefunction FourierPair::to_momentum(const Wavefunction& psi) const {
  if (!(psi.grid == position_)) throw ConfigurationError("state grid differs from the transform's position grid");
  std::vector<cplx> data(psi.samples.size());
  for (std::size_t j = 0; j < data.size(); ++j) data[j] = psi.samples[j] * pre_forward_[j];
  plan_.forward(data);
  for (std::size_t k = 0; k < data.size(); ++k) data[k] *= post_forward_[k];
  return Wavefunction(momentum_, std::move(data), psi.time);
}

Wavefunction FourierPair::to_position(const Wavefunction& phi) const {
  if (!(phi.grid == momentum_)) throw ConfigurationError("state grid differs from the transform's momentum grid");
  std::vector<cplx> data(phi.samples.size());
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = phi.samples[k] * pre_backward_[k];
  plan_.backward(data);
  for (std::size_t j = 0; j < data.size(); ++j) data[j] *= post_backward_[j];
  return Wavefunction(position_, std::move(data), phi.time);
}

Wavefunction to_momentum(const Wavefunction& psi, double hbar) {
  require_transform_grid(psi.grid, Space::Position);
  return FourierPair(psi.grid, hbar).to_momentum(psi);
}

Wavefunction to_position(const Wavefunction& phi, const Grid& position_grid, double hbar) {
  require_transform_grid(phi.grid, Space::Momentum);
  return FourierPair(position_grid, hbar).to_position(phi);
}

}  // namespace wavepack::numeric
