#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klein::cli {

/// Runs one invocation. `args` excludes the program name. Exit codes:
/// 0 all checks pass (findings allowed), 1 a check failed, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klein::cli
