#pragma once

#include <map>
#include <string>
#include <vector>

#include "wavepack/analysis/series.hpp"
#include "wavepack/cli/scenario.hpp"

namespace wavepack::cli {

struct MethodResult {
  Method method;
  analysis::AutocorrSeries series;
  double runtime_seconds = 0.0;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool upper_bound = true;  // pass iff value <= tolerance; otherwise value >= tolerance
  bool pass = false;
};

struct ComparisonReport {
  std::vector<CheckResult> checks;
  std::map<std::string, double> runtimes;  // seconds per method
  bool pass() const;
};

struct ScenarioResult {
  std::vector<MethodResult> methods;  // reference first, then the others in listed order
  ComparisonReport report;
  const MethodResult& reference() const { return methods.front(); }
};

/// Runs every method of the scenario and evaluates its checks. Tolerances are
/// multiplied by `tolerance_scale`. Physics failures propagate as exceptions
/// (GridTruncationError, TruncationError, ...).
ScenarioResult run_scenario(const Scenario& scenario, double tolerance_scale = 1.0);

/// The analytic method if present, else the first listed.
Method reference_method(const Scenario& scenario);

}  // namespace wavepack::cli
