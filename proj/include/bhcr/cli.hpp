#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhcr::cli {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code: 0 success, 1 input error, 2 mathematical obstruction,
/// 3 internal consistency failure or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhcr::cli
