#pragma once

#include <string_view>

namespace promap {

// Non-fatal diagnostics (duplicate rows, degenerate covariances, dropped
// pairs). Goes to stderr; never affects results.
void warn(std::string_view message);

}  // namespace promap
