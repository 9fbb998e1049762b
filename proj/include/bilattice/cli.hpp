#pragma once

// Command-line front-end. Every number printed is an exact string.
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace bilattice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;

/// args excludes the program name. Reads BILATTICE_SEED from the
/// environment; it overrides --seed and the config file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bilattice::cli
