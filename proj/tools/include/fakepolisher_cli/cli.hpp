#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fakepolisher::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kRuntimeError = 1, kUsageError = 2 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fakepolisher::cli
