#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shape {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kSuccess = 0, kInvalidInput = 1, kPreconditionFailed = 2 };

/// Runs one shapetool command. args excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shape
