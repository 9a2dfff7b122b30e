#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turancount::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_finding = 1;
inline constexpr int exit_usage = 2;

// Runs one invocation; args excludes the program name. Output goes to
// `out` unless --out names a file.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace turancount::cli
