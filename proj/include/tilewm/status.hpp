#pragma once

#include "tilewm/workspace.hpp"

#include <string>
#include <string_view>

namespace tilewm {

inline constexpr std::size_t kMaxStatusTitle = 64;

/// One line for external bars:
///   `1*:2 2:0 ... 9:0|ms|0.55|title`
/// Each workspace as index, `*` on the active one, and its window count;
/// then the active layout tag, its master ratio to two decimals and the
/// focused window title.
std::string render_status(WmState const& state);

/// Drops newlines and pipes, then cuts to at most 64 bytes on a UTF-8
/// boundary.
std::string sanitize_title(std::string_view title);

} // namespace tilewm
