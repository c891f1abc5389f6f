#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tde::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 3, kResourceGuard = 4 };

// Runs one command line (without the program name). The JSON report goes to
// `out`, diagnostics to `err`. An infeasible verdict is a successful run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tde::cli
