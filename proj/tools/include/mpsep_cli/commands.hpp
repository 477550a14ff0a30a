#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpsep::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success, McCulloch-Pitts, separable, battery pass
inline constexpr int kExitNegative = 1;  // not McCulloch-Pitts, inseparable, battery fail
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (args[0] is the program name). `in` backs
/// the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mpsep::cli
