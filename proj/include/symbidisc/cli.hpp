#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbidisc::cli {

/// Runs the command-line front end on the given arguments (program name not
/// included), writing JSON lines to `out`.  Returns the process exit code:
/// 0 on success, 1 on a failed verification, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbidisc::cli
