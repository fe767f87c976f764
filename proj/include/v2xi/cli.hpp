#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace v2xi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (without the program name) and returns the exit code.
/// Regular output goes to `out`; diagnostics and usage text on failure to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace v2xi::cli
