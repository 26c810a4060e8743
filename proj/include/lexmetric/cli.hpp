#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lexmetric {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification or validation failed
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable input, guard hit

/// Entry point of the lexmetric tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lexmetric
