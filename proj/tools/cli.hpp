#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltab::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

/// Runs one `ltab` command line (without the program name). Results go to
/// `out` (or --output), diagnostics and timing to `err`; `in` backs "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace ltab::cli
