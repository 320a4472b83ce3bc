#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mahler {

// Runs one CLI invocation; returns the process exit code (0 success,
// 2 domain/input error, 3 precision error).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mahler
