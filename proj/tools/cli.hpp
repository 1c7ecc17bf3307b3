#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopf::cli {

// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
