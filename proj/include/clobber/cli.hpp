#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clobber {

enum ExitCode { kExitOk = 0, kExitNo = 1, kExitUsage = 2 };

// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clobber
