#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgdyn {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgdyn
