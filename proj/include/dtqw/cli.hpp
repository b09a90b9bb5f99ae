#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dtqw {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_domain = 3,
};

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or to --out), diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtqw
