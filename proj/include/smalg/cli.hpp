#pragma once

#include <iosfwd>

namespace smalg::cli {

/// Process exit codes.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

/// Runs the command line tool with the given arguments (argv[0] is the
/// program name). Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smalg::cli
