#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsv {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsv
