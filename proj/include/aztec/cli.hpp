#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aztec {

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 success, 1 domain error or failed verification, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aztec
