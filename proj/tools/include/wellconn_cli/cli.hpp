#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wellconn::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kExternalToolError = 2;

/// Runs the command line `args` (args[0] is the program name). Structured
/// documents that are not directed to a file go to `out`; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wellconn::cli
