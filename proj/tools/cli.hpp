#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbigeo::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kInternalError = 3,
};

/// Runs the tool on `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbigeo::cli
