#pragma once

#include <iosfwd>

namespace patex::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, input_error = 2, capacity_error = 3, postcondition_error = 4 };

/// Entry point of the `patex` tool; writes human-readable output to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace patex::cli
