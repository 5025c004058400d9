#pragma once

#include <iosfwd>

#include "run_config.hpp"

namespace l1f::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBatteryFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitResolution = 3;

/// Runs one command. Human-readable progress goes to `out`; reports are
/// written under config.out_dir. Library errors map onto the exit codes
/// above, with the message on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace l1f::cli
