#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atanderiv::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// Dispatches one command line (args excludes the program name).  Results go
/// to out, diagnostics to err.  Returns the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace atanderiv::cli
