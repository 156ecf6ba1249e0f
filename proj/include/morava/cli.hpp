#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morava {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs one scenario. args excludes the program name.
/// Returns 0 when the scenario's claims hold, 1 when they do not, 2 on bad usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morava
