#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ohg::cli {

enum ExitCode : int { Success = 0, Negative = 1, UsageError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohg::cli
