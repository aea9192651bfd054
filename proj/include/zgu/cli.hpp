#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zgu {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariant = 3;

/// Runs the command line `args` (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace zgu
