#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "wavepack/core/errors.hpp"
#include "wavepack/core/grid.hpp"
#include "wavepack/core/params.hpp"

namespace wavepack::cli {

inline constexpr int kSchemaVersion = 1;

enum class Method { Analytic, SplitOperator, Spectral };
enum class Output { SeriesCsv, ArgandSvg, ReportJson };

const char* to_string(Method method) noexcept;
const char* to_string(Output output) noexcept;

/// Schema violation; `path()` names the offending field, e.g. "system.omega".
class SchemaError : public ConfigurationError {
 public:
  SchemaError(std::string path, const std::string& message)
      : ConfigurationError(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A fully validated run description. `resolved` is the same scenario as JSON
/// with every default filled in; feeding it back reproduces the run exactly.
struct Scenario {
  std::string name;
  std::string description;
  SystemSpec system;
  PacketParams params;
  double t_max;  // absolute time
  std::size_t n_samples;
  std::vector<Method> methods;
  bool anticorrelation;
  Grid grid;  // periodic, position space
  double max_dt;
  double edge_tolerance;
  int n_max;
  double tail_tolerance;
  std::vector<Output> outputs;
  std::vector<nlohmann::json> checks;  // each with its defaults filled in
  nlohmann::json resolved;

  bool has_method(Method m) const;
  bool wants(Output o) const;
};

/// Accepts a single scenario object or {"schema_version": 1, "scenarios": [...]}.
std::vector<Scenario> parse_config(const nlohmann::json& config);
Scenario parse_scenario(const nlohmann::json& config, const std::string& path = "");

/// Converts a value in `unit` (absolute, t0, T_cl, 1/omega_tilde) to absolute time.
double to_absolute_time(double value, const std::string& unit, const SystemSpec& system, const PacketParams& params,
                        const std::string& path);

}  // namespace wavepack::cli
