#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optima::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kValidation = 2 };

/// Runs one command line (without the program name). The report goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optima::cli
