#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsrpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand and writes the report to `out`.
/// Exit 0: success, 1: the report carries violations, 2: usage or input error (diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsrpm::cli
