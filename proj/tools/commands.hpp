#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topclose::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point of the topclose tool. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace topclose::cli
