#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wpnum::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2 };

/// Entry point of the `wpnum` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpnum::cli
