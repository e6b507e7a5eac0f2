#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ewb::cli {

// args excludes the program name. Returns the process exit code:
// 0 success/true, 1 false/not found/inconclusive, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewb::cli
