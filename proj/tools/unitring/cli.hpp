#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unitring::cli {

inline constexpr int kExitAnswered = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// `args` excludes the program name. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitring::cli
