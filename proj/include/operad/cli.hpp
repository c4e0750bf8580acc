#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace operad {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 semantic negative (not-equal, FAIL), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace operad
