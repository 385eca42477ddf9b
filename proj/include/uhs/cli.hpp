#pragma once

#include <string>
#include <vector>

namespace uhs::cli {

/// Runs one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 verification violation (counterexamples written
/// to disk), 2 usage error.
int run(const std::vector<std::string>& args);

}  // namespace uhs::cli
