#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olm::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name).  Normal output
/// goes to out, diagnostics to err.  Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace olm::cli
