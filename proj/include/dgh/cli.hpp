#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dgh {

// Exit codes of the command-line front end.
enum ExitCode { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInternal = 3 };

// args excludes the program name. The JSON report goes to out (or --out), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgh
