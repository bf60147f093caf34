#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leafcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitLimitError = 2;

// Largest order the single-graph oracle command accepts; above the library
// default a warning is printed.
inline constexpr std::size_t kCliOracleHardLimit = 12;

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace leafcert
