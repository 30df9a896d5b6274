#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degen {

enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1, // no such level, or a counterexample was found
    exit_usage = 2,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degen
