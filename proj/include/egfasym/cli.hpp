#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egfasym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egfasym::cli
