#ifndef HOPFPI_TOOLS_CLI_HPP
#define HOPFPI_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfpi::cli {

enum ExitCode : int { kVerified = 0, kFalsified = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfpi::cli

#endif  // HOPFPI_TOOLS_CLI_HPP
