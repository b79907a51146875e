#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hd::cli {

/// Runs one CLI invocation. Returns the process exit code:
/// 0 success, 1 usage error, 2 parse/validation or precondition error,
/// 3 infeasible or empty result where a result was required.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hd::cli
