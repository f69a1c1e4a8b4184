#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msum::cli {

enum ExitCode : int {
    kOk = 0,
    kViolations = 1,
    kUsage = 2,
    kCapExceeded = 3,
};

/// Runs the command line `args` (without the program name). Reads MSUM_STORE
/// from the environment when --store is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msum::cli
