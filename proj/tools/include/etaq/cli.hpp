#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etaq::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// Runs one command line; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace etaq::cli
