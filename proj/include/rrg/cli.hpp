#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics and the run manifest go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rrg::cli
