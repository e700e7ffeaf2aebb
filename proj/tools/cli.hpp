#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace softtopo::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  ok = 0,
  fails = 1,
  invalid_input = 2,
  internal_failure = 3,
};

/// Runs one command line (without the program name). All regular output
/// goes to `out`; diagnostics go to `err` as a single "error: <kind>: ..."
/// line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softtopo::cli
