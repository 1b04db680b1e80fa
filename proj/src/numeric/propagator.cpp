#include "wavepack/numeric/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wavepack::numeric {

namespace {

// Plain product; std::complex operator* adds inf/nan recovery that blocks vectorization.
void multiply(std::span<cplx> data, std::span<const cplx> factors) {
  auto* d = reinterpret_cast<double*>(data.data());
  const auto* f = reinterpret_cast<const double*>(factors.data());
  for (std::size_t j = 0; j < data.size(); ++j) {
    const double re = d[2 * j] * f[2 * j] - d[2 * j + 1] * f[2 * j + 1];
    const double im = d[2 * j] * f[2 * j + 1] + d[2 * j + 1] * f[2 * j];
    d[2 * j] = re;
    d[2 * j + 1] = im;
  }
}

}  // namespace

PropagatorConfig PropagatorConfig::for_horizon(double horizon, double max_dt) {
  if (!(max_dt > 0.0) || !std::isfinite(max_dt)) throw ConfigurationError("max_dt must be finite and > 0");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw ConfigurationError("horizon must be finite and > 0");
  PropagatorConfig config;
  config.n_steps = static_cast<std::size_t>(std::ceil(horizon / max_dt - 1e-9));
  config.n_steps = std::max<std::size_t>(config.n_steps, 1);
  config.dt = horizon / static_cast<double>(config.n_steps);
  return config;
}

SplitOperatorPropagator::SplitOperatorPropagator(const Wavefunction& psi0, const SystemSpec& system,
                                                 const PhysicalConstants& constants, double edge_tolerance,
                                                 std::size_t edge_guard_points)
    : system_(system), constants_(constants), edge_tolerance_(edge_tolerance), guard_points_(edge_guard_points),
      state_(psi0), plan_(psi0.grid.size()) {
  constants_.validate();
  const Grid& grid = psi0.grid;
  if (grid.space() != Space::Position) throw ConfigurationError("propagation starts from a position-space state");
  if (grid.convention() != GridConvention::Periodic || !is_power_of_two(grid.size()))
    throw ConfigurationError("propagation needs a periodic power-of-two grid");
  if (2 * guard_points_ >= grid.size()) throw ConfigurationError("edge guard is wider than the grid");

  const std::size_t n = grid.size();
  const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * grid.spacing());
  momenta_.resize(n);
  potential_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double index = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    momenta_[k] = constants_.hbar * dk * index;
    potential_[k] = system_.potential(grid[k], constants_.mass);
  }
  guard(state_.samples, 0, "position");
}

void SplitOperatorPropagator::prepare(double dt) {
  if (dt == prepared_dt_ && !kinetic_.empty()) return;
  const std::size_t n = momenta_.size();
  half_potential_.resize(n);
  kinetic_.resize(n);
  const double hbar = constants_.hbar, m = constants_.mass;
  for (std::size_t k = 0; k < n; ++k) {
    half_potential_[k] = std::polar(1.0, -potential_[k] * dt / (2.0 * hbar));
    kinetic_[k] = std::polar(1.0 / static_cast<double>(n), -momenta_[k] * momenta_[k] * dt / (2.0 * m * hbar));
  }
  prepared_dt_ = dt;
}

void SplitOperatorPropagator::guard(std::span<const cplx> data, std::size_t first, const char* space) const {
  const std::size_t n = data.size();
  double peak_sq = 0.0;
  for (const auto& v : data) peak_sq = std::max(peak_sq, std::norm(v));
  double edge_sq = 0.0;
  // `first` is the index of the lowest grid point in storage order.
  for (std::size_t i = 0; i < guard_points_; ++i) {
    edge_sq = std::max(edge_sq, std::norm(data[(first + i) % n]));
    edge_sq = std::max(edge_sq, std::norm(data[(first + n - 1 - i) % n]));
  }
  if (edge_sq > edge_tolerance_ * edge_tolerance_ * peak_sq) {
    const double edge = std::sqrt(edge_sq), peak = std::sqrt(peak_sq);
    std::ostringstream msg;
    msg << "grid truncation at t = " << state_.time << ": " << space << "-space magnitude " << edge
        << " within " << guard_points_ << " points of the edge exceeds " << edge_tolerance_ << " x peak " << peak
        << "; enlarge the grid or shorten the horizon";
    throw GridTruncationError(msg.str(), edge);
  }
}

void SplitOperatorPropagator::step(double dt) {
  prepare(dt);
  auto& psi = state_.samples;
  multiply(psi, half_potential_);
  plan_.forward(psi);
  guard(psi, psi.size() / 2, "momentum");
  multiply(psi, kinetic_);
  plan_.backward(psi);
  multiply(psi, half_potential_);
  state_.time += dt;
  guard(psi, 0, "position");
}

void SplitOperatorPropagator::advance(double duration, double max_dt) {
  if (duration == 0.0) return;
  const auto config = PropagatorConfig::for_horizon(std::abs(duration), max_dt);
  const double dt = std::copysign(config.dt, duration);
  const double target = state_.time + duration;
  for (std::size_t s = 0; s < config.n_steps; ++s) step(dt);
  state_.time = target;
}

Wavefunction propagate(const Wavefunction& psi0, const SystemSpec& system, const PhysicalConstants& constants,
                       const PropagatorConfig& config, const StepCallback& on_step) {
  if (!(config.dt > 0.0) || config.n_steps < 1) throw ConfigurationError("propagator needs dt > 0 and n_steps >= 1");
  SplitOperatorPropagator propagator(psi0, system, constants, config.edge_tolerance, config.edge_guard_points);
  for (std::size_t s = 1; s <= config.n_steps; ++s) {
    propagator.step(config.dt);
    if (on_step) on_step(s, propagator.state());
  }
  return propagator.state();
}

}  // namespace wavepack::numeric
