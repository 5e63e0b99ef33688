#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixpoint {

/// Full command-line driver: parses `args` (without the program name),
/// dispatches to the requested subcommand, and writes reports to `out` and
/// diagnostics to `err`.  Returns the process exit code:
///   0  command ran (for verify: no selected class violated)
///   1  verify found a violated class among the selected ones
///   2  invalid input of any kind (flags, files, instances)
/// Exposed as a library function so tests can drive the tool in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fixpoint
