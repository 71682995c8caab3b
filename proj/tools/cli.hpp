#ifndef NCFIN_TOOLS_CLI_HPP
#define NCFIN_TOOLS_CLI_HPP

#include <iosfwd>

namespace ncfin::cli {

/// Exit codes of the ncfin tool.
enum ExitCode : int { kOk = 0, kPropertyFailed = 1, kUsage = 2 };

/// Runs one ncfin command line. Piped input (module and complex files, value
/// sequences) is read from `in`; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ncfin::cli

#endif  // NCFIN_TOOLS_CLI_HPP
