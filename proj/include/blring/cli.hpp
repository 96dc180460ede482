#ifndef BLRING_CLI_HPP
#define BLRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace blring::cli {

/// Exit codes: 0 ok, 1 mismatch, 2 usage, 3 cap/resource.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Parses and runs one command line (argv without the program name).
/// All normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace blring::cli

#endif
