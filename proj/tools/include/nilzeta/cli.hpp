#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilzeta::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kBadInput = 2, kBudget = 3 };

/// Runs one command line (without the program name). The result document
/// goes to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilzeta::cli
