#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace agol::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, usage_error = 2 };

// Runs the agol-links command line; `args` excludes the program name.
// Reports go to `out`, error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agol::cli
