#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affyh {

/// Runs one CLI command; args exclude the program name.  Returns the exit
/// status: 0 all checks pass, 1 a check failed, 2 usage, parse or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affyh
