#pragma once

#include "tilewm/geometry.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace tilewm {

/// Display-server window handle. Zero is never a live window.
enum class WindowId : std::uint32_t {};

constexpr std::uint32_t raw(WindowId id) { return static_cast<std::uint32_t>(id); }

struct WindowNode {
    WindowId id{};
    std::string cls;
    std::string title;
    bool floating = false;
    bool fullscreen = false;
    bool pinned = false;
    /// Last geometry a floating window asked for.
    std::optional<Rect> float_geometry;

    bool operator==(WindowNode const&) const = default;
};

enum class FocusDirection { Next, Prev };

struct Workspace {
    int index = 1;
    /// Newest first; position 0 is the master slot.
    std::deque<WindowNode> nodes;
    LayoutKind layout = LayoutKind::MasterStack;
    LayoutParams params;
    std::optional<std::size_t> focused;

    bool operator==(Workspace const&) const = default;

    bool contains(WindowId id) const;
    std::optional<std::size_t> position(WindowId id) const;
    WindowNode const* focused_node() const;
    WindowNode* focused_node();
};

struct WmState {
    std::vector<Workspace> workspaces;
    int active = 1;
    Rect screen{0, 0, 1920, 1080};

    bool operator==(WmState const&) const = default;

    static WmState make(int workspace_count, Rect screen, LayoutParams params = {},
                        LayoutKind layout = LayoutKind::MasterStack);

    int workspace_count() const { return static_cast<int>(workspaces.size()); }
    bool in_range(int index) const { return index >= 1 && index <= workspace_count(); }

    /// Throws BadWorkspaceIndex.
    Workspace& at(int index);
    Workspace const& at(int index) const;
    Workspace& current() { return at(active); }
    Workspace const& current() const { return at(active); }

    /// Workspace currently holding `id`, if any.
    std::optional<int> home_of(WindowId id) const;
    WindowNode const* find(WindowId id) const;
    WindowNode* find(WindowId id);
    /// Focused window of the active workspace.
    std::optional<WindowId> focus() const;
};

Workspace insert_window(Workspace ws, WindowNode node);
Workspace remove_window(Workspace ws, WindowId id);
Workspace cycle_focus(Workspace ws, FocusDirection direction);

WmState move_window(WmState state, WindowId id, int target);

struct SwitchResult {
    WmState state;
    std::vector<WindowId> to_unmap;
    std::vector<WindowId> to_map;
};

SwitchResult switch_workspace(WmState state, int target);

/// Active workspace windows in slot order, then pinned windows from the
/// other workspaces in workspace order.
std::vector<WindowId> visible_windows(WmState const& state);
bool is_visible(WmState const& state, WindowId id);

/// Every live id in exactly one workspace, ids unique and nonzero, focus
/// positions in range, active index in range.
bool invariants_hold(WmState const& state);

} // namespace tilewm
