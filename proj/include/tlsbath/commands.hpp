#pragma once

#include <iosfwd>

namespace tlsbath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point of the `tlsbath` tool: subcommands field, lindblad, bath and
/// spectrum. Summaries go to `out`, diagnostics to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlsbath::cli
