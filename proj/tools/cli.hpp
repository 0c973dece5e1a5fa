#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gwbinom::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 closed form and oracle diverge, 2 usage or limit error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwbinom::cli
