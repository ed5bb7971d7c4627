#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etaq::cli {

/// Runs the etaq command line with `args` (without the program name).
/// Returns the process exit code: 0 on success, 1 when a verification
/// fails, 2 on usage or computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaq::cli
