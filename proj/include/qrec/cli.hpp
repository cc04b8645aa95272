#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrec {

// Runs one CLI invocation (args excluding the program name) against the
// given streams.  Exit codes: 0 success, 1 mathematical infeasibility,
// 2 malformed input or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrec
