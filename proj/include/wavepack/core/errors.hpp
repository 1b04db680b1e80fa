#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wavepack {

using cplx = std::complex<double>;

/// Invalid parameters, mismatched grids, malformed input.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The sampled state does not decay to the boundary tolerance at the grid edges.
class GridTruncationError : public std::runtime_error {
 public:
  GridTruncationError(const std::string& what, double edge_magnitude)
      : std::runtime_error(what), edge_magnitude_(edge_magnitude) {}
  double edge_magnitude() const noexcept { return edge_magnitude_; }

 private:
  double edge_magnitude_;
};

enum class Unsupported {
  TransformRoute,  // no closed form in this representation; transform the position-space state
  NoClosedForm,    // parameter combination outside the closed-form cases; use a numeric route
  EnergyMoments,   // energy moments are only available for the free particle
  SaturationLaw,   // system has no saturating long-time law
};

class UnsupportedCaseError : public std::runtime_error {
 public:
  UnsupportedCaseError(Unsupported kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Unsupported kind() const noexcept { return kind_; }

 private:
  Unsupported kind_;
};

/// Eigenbasis expansion lost more norm than allowed.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int suggested_n_max)
      : std::runtime_error(what), suggested_n_max_(suggested_n_max) {}
  int suggested_n_max() const noexcept { return suggested_n_max_; }

 private:
  int suggested_n_max_;
};

}  // namespace wavepack
