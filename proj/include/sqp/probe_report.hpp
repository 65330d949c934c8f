#pragma once

#include <optional>
#include <string>

namespace sqp {

/// Outcome of a finite-window probe. A probe only ever speaks about the
/// window it computed, never about the asymptotic statement.
enum class Verdict { holds_on_window, violated };

/// "holds-on-window" or "violated-at-<s>".
std::string verdict_string(Verdict v, std::optional<int> violated_at);

}  // namespace sqp
