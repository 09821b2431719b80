#ifndef COVERLAB_CLI_APP_HPP
#define COVERLAB_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coverlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one coverlab invocation. `args` excludes the program name. Regular
/// output goes to `out` (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coverlab::cli

#endif
