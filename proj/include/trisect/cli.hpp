#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // infeasible, illegal move, trivial input, not found
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or malformed files

/// Run the command line `args` (args[0] is the program name).  The file name
/// "-" means `in` for inputs and `out` for outputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace trisect::cli
