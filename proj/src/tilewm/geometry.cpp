#include "tilewm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace tilewm {

namespace {

constexpr int kMinCoord = std::numeric_limits<std::int16_t>::min();
constexpr int kMaxCoord = std::numeric_limits<std::int16_t>::max();

double snap_ratio(double value)
{
    return std::round(value * 1e6) / 1e6;
}

Rect inset(Rect const& cell, int gap)
{
    int const dx = std::min(gap, (cell.w - 1) / 2);
    int const dy = std::min(gap, (cell.h - 1) / 2);
    return {cell.x + dx, cell.y + dy, cell.w - 2 * dx, cell.h - 2 * dy};
}

} // namespace

bool Rect::contains(Rect const& other) const
{
    return other.x >= x && other.y >= y && other.right() <= right() && other.bottom() <= bottom();
}

bool Rect::intersects(Rect const& other) const
{
    return x < other.right() && other.x < right() && y < other.bottom() && other.y < bottom();
}

bool Rect::valid() const
{
    return w > 0 && h > 0 && x >= kMinCoord && y >= kMinCoord && right() <= kMaxCoord
           && bottom() <= kMaxCoord;
}

std::string_view layout_tag(LayoutKind kind)
{
    return kind == LayoutKind::Monocle ? "mono" : "ms";
}

int master_width(int screen_width, double master_ratio)
{
    // round half up; the epsilon absorbs representation error in the ratio
    auto const width = static_cast<int>(std::floor(master_ratio * screen_width + 0.5 + 1e-9));
    return std::clamp(width, 1, std::max(1, screen_width - 1));
}

std::vector<Rect> apply_layout(LayoutKind kind, Rect const& screen, std::size_t count,
                               LayoutParams const& params)
{
    std::vector<Rect> cells;
    cells.reserve(count);
    if (count == 0)
        return cells;

    if (kind == LayoutKind::Monocle || count == 1 || screen.w < 2) {
        cells.assign(count, screen);
    } else {
        int const mw = master_width(screen.w, params.master_ratio);
        cells.push_back({screen.x, screen.y, mw, screen.h});

        int const stack_x = screen.x + mw;
        int const stack_w = screen.w - mw;
        // more stack windows than pixel rows: the overflow shares the last row
        int const rows = static_cast<int>(std::min<std::size_t>(count - 1, screen.h));
        int const row_h = screen.h / rows;
        for (std::size_t i = 0; i + 1 < count; ++i) {
            int const row = std::min(static_cast<int>(i), rows - 1);
            int const y = screen.y + row * row_h;
            int const h = row == rows - 1 ? screen.bottom() - y : row_h;
            cells.push_back({stack_x, y, stack_w, h});
        }
    }

    if (params.gap > 0) {
        for (auto& cell : cells)
            cell = inset(cell, params.gap);
    }
    return cells;
}

LayoutParams adjust_ratio(LayoutParams params, double delta)
{
    params.master_ratio =
        std::clamp(snap_ratio(params.master_ratio + delta), kMinMasterRatio, kMaxMasterRatio);
    return params;
}

} // namespace tilewm
