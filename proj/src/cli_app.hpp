#pragma once

#include <string>
#include <vector>

namespace solenoid::cli {

// Runs one CLI command (args exclude the program name). Exit codes:
//   0  success (verify: every executed suite passed)
//   1  verify suite failure
//   2  configuration / usage error
//   3  numerical failure (budget, bracketing, membership, ...)
int run(const std::vector<std::string>& args);

int run(int argc, char** argv);

}  // namespace solenoid::cli
