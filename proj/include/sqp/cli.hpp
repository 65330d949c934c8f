#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqp {

enum ExitCode : int {
  exit_ok = 0,
  exit_violated = 1,
  exit_input_error = 2,
  exit_resource_cap = 3,
};

/// Runs the `sqp` command line. `args` excludes the program name. Ideals are
/// read from the named file, or from `in` when the path is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqp
