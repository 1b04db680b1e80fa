#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavepack::cli {

enum ExitCode : int { kPass = 0, kComparisonFailure = 1, kConfigError = 2, kRuntimeError = 3 };

/// Command-line entry. `args` excludes the program name.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses and runs one config text, writing artifacts into `out_dir`.
int validate_and_run(const std::string& config_text, const std::string& out_dir, double tolerance_scale, bool quiet,
                     std::ostream& out, std::ostream& err);

}  // namespace wavepack::cli
