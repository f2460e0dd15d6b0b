#ifndef ECSS_CLI_HPP
#define ECSS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ecss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitScaleGuard = 3;
inline constexpr int kExitIo = 4;

inline constexpr int kFormatVersion = 1;

/// Parses the command line, dispatches one subcommand and writes its report
/// to `out` (or to --output). Diagnostics go to `err` as a single line.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with argv[1..] given as strings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecss::cli

#endif  // ECSS_CLI_HPP
