#pragma once

#include <iosfwd>

namespace medwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitDomain = 3;

/// Entry point of the `medwave` tool: subcommands denoise, bench, estimate, metrics.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace medwave::cli
