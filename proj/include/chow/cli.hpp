#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chow {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chow
