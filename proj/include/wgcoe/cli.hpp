#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wgcoe::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kResourceError = 2, kVerificationFailure = 3 };

// Runs one invocation; argv[0] is the program name. Results go to `out`,
// diagnostics and cache warnings to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wgcoe::cli
