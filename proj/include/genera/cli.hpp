#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genera {

// Runs one CLI invocation. `args` excludes the program name.
// Returns the process exit code: 0 success, 1 failed verdict,
// 2 usage error, 3 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genera
