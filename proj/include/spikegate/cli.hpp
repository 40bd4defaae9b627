#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace spikegate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Default seed when neither --seed nor SPIKEGATE_SEED is given.
inline constexpr unsigned long long kDefaultSeed = 42;

/// Entry point behind the `spikegate` binary. `env` supplies environment
/// variables (only SPIKEGATE_SEED is read). Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env);

/// Same, reading the real process environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spikegate::cli
