#pragma once

#include <ostream>

namespace cqsym {

// Exit codes of the cqf tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a verification found a counterexample
  kExitUsage = 2,
  kExitGuard = 3,
};

// Entry point of the cqf tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqsym
