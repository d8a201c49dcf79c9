#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace andgraph::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kExhausted = 3 };

/// Runs one subcommand. `args` excludes the program name. Every completed
/// run prints "verdict=<yes|no|exhausted> time_ms=<t>" as the last line of
/// `out`; errors go to `err` with exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace andgraph::cli
