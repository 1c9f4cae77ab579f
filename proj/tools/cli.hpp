#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace topobelief::cli {

/// Exit statuses: the verdict is encoded so shell harnesses need not parse output.
inline constexpr int kExitHolds = 0;     ///< holds / valid / suite clean / converted
inline constexpr int kExitFails = 1;     ///< fails / countermodel found
inline constexpr int kExitUsage = 2;     ///< usage or input error

/// Runs one command. `args` excludes the program name, e.g. {"eval", "--model", "m.json", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topobelief::cli
