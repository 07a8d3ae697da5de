#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace puregaps::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Subcommands:
/// gk, kummer, generic, verify, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from PUREGAPS_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

}  // namespace puregaps::cli
