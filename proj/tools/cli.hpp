#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trirep::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default oracle work budget.
inline constexpr const char* kBudgetEnv = "TRIREP_BUDGET";

/// Entry point behind the `trirep` binary. `args` excludes the program name.
/// Returns 0 on success/pass, 1 on a failed comparison or verification, 2 on
/// a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trirep::cli
