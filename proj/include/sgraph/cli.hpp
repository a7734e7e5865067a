#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgraph::cli {

/// Exit codes of the `sgraph` binary.
enum ExitCode : int { ok = 0, law_failure = 1, parse_error = 2, cycle_error = 3, usage_error = 4 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgraph::cli
