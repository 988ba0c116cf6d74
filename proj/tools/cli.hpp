#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subsum::cli {

enum ExitCode : int {
  kOk = 0,
  kWitnesses = 1,  // a refutation or counterexample was found and reported
  kUsage = 2,
  kBudget = 3,
};

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subsum::cli
