#include "wavepack/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wavepack/cli/presets.hpp"
#include "wavepack/cli/runner.hpp"
#include "wavepack/cli/scenario.hpp"
#include "wavepack/cli/writers.hpp"

namespace wavepack::cli {

namespace {

int run_parsed(const std::vector<Scenario>& scenarios, const std::string& out_dir, double tolerance_scale,
               bool quiet, std::ostream& out, std::ostream& err) {
  int status = kPass;
  for (const auto& scenario : scenarios) {
    ScenarioResult result;
    std::vector<std::filesystem::path> written;
    try {
      result = run_scenario(scenario, tolerance_scale);
      written = write_artifacts(scenario, result, out_dir);
    } catch (const GridTruncationError& e) {
      err << "error: " << scenario.name << ": grid truncation: " << e.what() << '\n';
      return kRuntimeError;
    } catch (const TruncationError& e) {
      err << "error: " << scenario.name << ": " << e.what() << " (suggested n_max " << e.suggested_n_max() << ")\n";
      return kRuntimeError;
    } catch (const std::exception& e) {
      err << "error: " << scenario.name << ": " << e.what() << '\n';
      return kRuntimeError;
    }

    const bool pass = result.report.pass();
    if (!quiet) {
      out << (pass ? "PASS " : "FAIL ") << scenario.name << '\n';
      for (const auto& c : result.report.checks)
        out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " = " << format_number(c.value)
            << (c.upper_bound ? " <= " : " >= ") << format_number(c.tolerance) << '\n';
      for (const auto& path : written) out << "  wrote " << path.string() << '\n';
    }
    if (!pass) {
      const auto report = std::find_if(written.begin(), written.end(),
                                       [](const auto& p) { return p.extension() == ".json"; });
      err << "comparison failure in " << scenario.name << "; report: "
          << (report != written.end() ? report->string() : std::string("(report_json not requested)")) << '\n';
      status = kComparisonFailure;
    }
  }
  return status;
}

int run_json(const nlohmann::json& config, const std::string& out_dir, double tolerance_scale, bool quiet,
             std::ostream& out, std::ostream& err) {
  std::vector<Scenario> scenarios;
  try {
    scenarios = parse_config(config);
  } catch (const SchemaError& e) {
    err << "config error at " << e.path() << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return run_parsed(scenarios, out_dir, tolerance_scale, quiet, out, err);
}

}  // namespace

int validate_and_run(const std::string& config_text, const std::string& out_dir, double tolerance_scale, bool quiet,
                     std::ostream& out, std::ostream& err) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::parse_error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return run_json(config, out_dir, tolerance_scale, quiet, out, err);
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian wave packet autocorrelation scenarios", "wavepack"};
  app.require_subcommand(1);
  double tolerance_scale = 1.0;
  bool quiet = false;
  app.add_option("--tolerance-scale", tolerance_scale, "Multiply every comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "Only report errors");

  std::string config_path, preset_name, out_dir = ".";
  auto* run = app.add_subcommand("run", "Run the scenarios of a config file");
  run->add_option("config", config_path, "Config file (JSON)")->required();
  run->add_option("--out", out_dir, "Artifact directory");
  auto* preset = app.add_subcommand("preset", "Run a built-in scenario");
  preset->add_option("name", preset_name, "Preset name")->required();
  preset->add_option("--out", out_dir, "Artifact directory");
  auto* list = app.add_subcommand("list-presets", "Print the built-in scenario names");
  // Global options are accepted after the subcommand too.
  for (auto* sub : {run, preset, list}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kConfigError;
  }

  if (list->parsed()) {
    for (const auto& name : preset_names()) out << name << '\n';
    return kPass;
  }
  if (preset->parsed()) {
    const auto config = preset_config(preset_name);
    if (!config) {
      err << "config error: unknown preset '" << preset_name << "' (see list-presets)\n";
      return kConfigError;
    }
    return run_json(*config, out_dir, tolerance_scale, quiet, out, err);
  }

  std::ifstream file(config_path, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << config_path << '\n';
    return kRuntimeError;
  }
  std::stringstream text;
  text << file.rdbuf();
  return validate_and_run(text.str(), out_dir, tolerance_scale, quiet, out, err);
}

}  // namespace wavepack::cli
