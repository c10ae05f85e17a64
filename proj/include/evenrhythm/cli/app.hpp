#pragma once

#include <iosfwd>

namespace evenrhythm::cli {

/// Full command-line entry point: parses argv, runs one subcommand and maps
/// errors to exit codes (0 ok, 2 usage or parse error, 3 failed check).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evenrhythm::cli
