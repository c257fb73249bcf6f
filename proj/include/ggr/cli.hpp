#ifndef GGR_CLI_HPP
#define GGR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ggr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,      // bad flags, bad function spec, malformed certificate
  kInfeasible = 2, // solver span too small
  kInternal = 3,   // invariant violation in the construction
  kRejected = 4,   // certificate failed verification
};

/// Default ceiling on n; --allow-large lifts it.
inline constexpr long kDefaultMaxN = 16;

/// Runs one subcommand. args excludes the program name. `in` feeds verify
/// and render when no certificate path (or "-") is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace ggr::cli

#endif // GGR_CLI_HPP
