#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace tilewm {

struct Rect {
    int x = 0;
    int y = 0;
    int w = 1;
    int h = 1;

    bool operator==(Rect const&) const = default;

    long long area() const { return static_cast<long long>(w) * h; }
    int right() const { return x + w; }
    int bottom() const { return y + h; }

    bool contains(Rect const& other) const;
    bool intersects(Rect const& other) const;
    /// Positive extent and every edge representable as a signed 16-bit
    /// protocol coordinate.
    bool valid() const;
};

enum class LayoutKind { MasterStack, Monocle };

/// Short tag used by the status line and the config file ("ms" / "mono").
std::string_view layout_tag(LayoutKind kind);

inline constexpr double kMinMasterRatio = 0.05;
inline constexpr double kMaxMasterRatio = 0.95;

struct LayoutParams {
    double master_ratio = 0.55;
    double ratio_step = 0.05;
    int gap = 0;

    bool operator==(LayoutParams const&) const = default;
};

/// Geometry for `count` windows in slot order; slot 0 is the master.
///
/// With a zero gap the rects partition `screen` exactly: the master takes
/// round(master_ratio * screen.w) columns on the left at full height and
/// the stack column is split top to bottom into floor(h / (count - 1))
/// rows, the last row absorbing the remainder. One window, or any number
/// under Monocle, gets the whole screen. A positive gap insets every cell
/// by up to `gap` pixels on each side, never below one pixel of extent.
std::vector<Rect> apply_layout(LayoutKind kind, Rect const& screen, std::size_t count,
                               LayoutParams const& params);

/// Width of the master column for a screen `screen_width` pixels wide.
int master_width(int screen_width, double master_ratio);

/// New params with master_ratio = clamp(old + delta) on the 1e-6 grid.
LayoutParams adjust_ratio(LayoutParams params, double delta);

} // namespace tilewm
