#ifndef SNORM_CLI_HPP
#define SNORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace snorm::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). JSON reports go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snorm::cli

#endif  // SNORM_CLI_HPP
