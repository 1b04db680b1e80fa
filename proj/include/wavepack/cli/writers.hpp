#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavepack/analysis/series.hpp"
#include "wavepack/cli/runner.hpp"

namespace wavepack::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g, with negative zero printed as 0.
std::string format_number(double value);

/// Header `t,re_A,im_A,abs2_A,hilbert_dist[,re_Abar,im_Abar]`, LF endings.
std::string series_csv(const analysis::AutocorrSeries& series);

/// SVG 1.1 document: unit circle, axes and one polyline per series in the
/// complex plane of A(t).
std::string argand_svg(const std::vector<std::pair<std::string, const analysis::AutocorrSeries*>>& curves);

/// {scenario, resolved_config, checks, runtimes, pass}. Runtimes are wall-clock
/// and the only non-reproducible part.
nlohmann::json report_json(const Scenario& scenario, const ScenarioResult& result);

/// Writes bytes as-is; throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Writes the scenario's requested artifacts into `dir` and returns their paths.
/// Files: <name>.<method>.csv, <name>.argand.svg, <name>.report.json.
std::vector<std::filesystem::path> write_artifacts(const Scenario& scenario, const ScenarioResult& result,
                                                   const std::filesystem::path& dir);

}  // namespace wavepack::cli
