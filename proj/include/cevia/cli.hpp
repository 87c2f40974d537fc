#pragma once

#include <iosfwd>

namespace cevia {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitDegenerate = 2,
  kExitUsage = 64,
  kExitIo = 73,
};

/// Runs one invocation of the tool. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cevia
