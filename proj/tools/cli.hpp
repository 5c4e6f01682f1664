#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a3kit::cli {

// Runs one command line. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a3kit::cli
