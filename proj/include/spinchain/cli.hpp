#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinchain {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // transfer failed or schedule infeasible
inline constexpr int kExitUsage = 2;    // parse or validation error

// Entry point behind the `spinchain` executable. args excludes the program
// name. Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinchain
