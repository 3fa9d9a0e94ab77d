#ifndef TRICHEB_CLI_HPP_
#define TRICHEB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tricheb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (coeffs, gram, eval-grid, verify, project).  args[0] is
/// the program name.  Output goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricheb::cli

#endif  // TRICHEB_CLI_HPP_
