#pragma once

#include <functional>

#include "wavepack/core/grid.hpp"
#include "wavepack/core/params.hpp"
#include "wavepack/core/quadrature.hpp"
#include "wavepack/numeric/transform.hpp"

namespace wavepack::numeric {

enum class SplittingScheme { StrangSplit };

struct PropagatorConfig {
  double dt = 1e-3;
  std::size_t n_steps = 1;
  SplittingScheme scheme = SplittingScheme::StrangSplit;
  /// The run aborts once |psi| within `edge_guard_points` samples of either
  /// grid edge (in position or momentum) exceeds edge_tolerance * peak.
  double edge_tolerance = kDefaultBoundaryTolerance;
  std::size_t edge_guard_points = 10;

  /// Equal steps no longer than max_dt whose total is exactly `horizon`.
  static PropagatorConfig for_horizon(double horizon, double max_dt);
  double horizon() const noexcept { return dt * static_cast<double>(n_steps); }
};

/// Strang-split time stepping exp(-iV dt/2hbar) exp(-iT dt/hbar) exp(-iV dt/2hbar),
/// with the kinetic factor applied on the FFT momentum grid.
class SplitOperatorPropagator {
 public:
  SplitOperatorPropagator(const Wavefunction& psi0, const SystemSpec& system, const PhysicalConstants& constants,
                          double edge_tolerance = kDefaultBoundaryTolerance, std::size_t edge_guard_points = 10);

  void step(double dt);
  /// Advances by `duration` in equal steps of at most max_dt.
  void advance(double duration, double max_dt);

  const Wavefunction& state() const noexcept { return state_; }
  double time() const noexcept { return state_.time; }

 private:
  void prepare(double dt);
  void guard(std::span<const cplx> data, std::size_t first, const char* space) const;

  SystemSpec system_;
  PhysicalConstants constants_;
  double edge_tolerance_;
  std::size_t guard_points_;
  Wavefunction state_;
  FftPlan plan_;
  std::vector<double> momenta_;    // FFT ordering
  std::vector<double> potential_;
  double prepared_dt_ = 0.0;
  std::vector<cplx> half_potential_;
  std::vector<cplx> kinetic_;
};

using StepCallback = std::function<void(std::size_t step, const Wavefunction& state)>;

Wavefunction propagate(const Wavefunction& psi0, const SystemSpec& system, const PhysicalConstants& constants,
                       const PropagatorConfig& config, const StepCallback& on_step = {});

}  // namespace wavepack::numeric
