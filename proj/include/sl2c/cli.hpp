#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2c {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitIo = 3 };

/// Entry point of the `sl2c` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2c
