#pragma once

#include <iosfwd>

namespace braidinv::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_domain = 3,
  exit_move = 4,
};

// Runs one command line; output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidinv::cli
