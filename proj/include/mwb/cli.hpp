#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwb {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,   // bribe: no solution within budget; verify: p does not co-win
  kExitBadInput = 2,     // parse error or invalid parameters
  kExitResource = 3,     // a size guard was exceeded
  kExitUnsupported = 4,  // the requested algorithm does not cover this variant
  kExitInvalidAction = 5,
};

// Runs the tool with `args` (without the program name). Subcommands: winners, bribe, rank, gen,
// verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwb
