#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codenet {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codenet
