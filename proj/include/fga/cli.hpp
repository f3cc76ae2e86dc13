#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fga::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kGroupFile = 3,
  kDomain = 4,
  kCap = 5,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fga::cli
