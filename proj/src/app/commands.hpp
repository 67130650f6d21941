#pragma once

#include "app/config.hpp"

#include <iosfwd>

namespace vortexfield::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Validates `cfg`, runs its command and returns the process exit status.
/// Progress goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_minimize(const RunConfig& cfg, std::ostream& out);
int cmd_landscape(const RunConfig& cfg, std::ostream& out);
int cmd_field(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace vortexfield::app
