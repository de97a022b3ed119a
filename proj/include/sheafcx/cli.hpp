#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sheafcx {

/// Exit codes of run_command.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomain = 1,
    kExitParse = 2,
    kExitResource = 3,
};

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheafcx
