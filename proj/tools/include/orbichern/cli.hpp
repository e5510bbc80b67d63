#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbichern::cli {

enum ExitCode : int {
    kOk = 0,
    kInequality = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace orbichern::cli
