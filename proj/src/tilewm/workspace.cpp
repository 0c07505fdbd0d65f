#include "tilewm/workspace.hpp"

#include "tilewm/error.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace tilewm {

namespace {

std::string id_text(WindowId id)
{
    return std::to_string(raw(id));
}

} // namespace

bool Workspace::contains(WindowId id) const
{
    return position(id).has_value();
}

std::optional<std::size_t> Workspace::position(WindowId id) const
{
    auto const it = std::find_if(nodes.begin(), nodes.end(), [id](auto const& n) { return n.id == id; });
    if (it == nodes.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

WindowNode const* Workspace::focused_node() const
{
    return focused && *focused < nodes.size() ? &nodes[*focused] : nullptr;
}

WindowNode* Workspace::focused_node()
{
    return focused && *focused < nodes.size() ? &nodes[*focused] : nullptr;
}

WmState WmState::make(int workspace_count, Rect screen, LayoutParams params, LayoutKind layout)
{
    WmState state;
    state.screen = screen;
    state.workspaces.reserve(workspace_count);
    for (int i = 1; i <= workspace_count; ++i) {
        Workspace ws;
        ws.index = i;
        ws.layout = layout;
        ws.params = params;
        state.workspaces.push_back(std::move(ws));
    }
    return state;
}

Workspace& WmState::at(int index)
{
    if (!in_range(index))
        throw Error(ErrorCode::BadWorkspaceIndex, "no workspace " + std::to_string(index));
    return workspaces[index - 1];
}

Workspace const& WmState::at(int index) const
{
    if (!in_range(index))
        throw Error(ErrorCode::BadWorkspaceIndex, "no workspace " + std::to_string(index));
    return workspaces[index - 1];
}

std::optional<int> WmState::home_of(WindowId id) const
{
    for (auto const& ws : workspaces) {
        if (ws.contains(id))
            return ws.index;
    }
    return std::nullopt;
}

WindowNode const* WmState::find(WindowId id) const
{
    for (auto const& ws : workspaces) {
        if (auto pos = ws.position(id))
            return &ws.nodes[*pos];
    }
    return nullptr;
}

WindowNode* WmState::find(WindowId id)
{
    return const_cast<WindowNode*>(std::as_const(*this).find(id));
}

std::optional<WindowId> WmState::focus() const
{
    if (auto const* node = current().focused_node())
        return node->id;
    return std::nullopt;
}

Workspace insert_window(Workspace ws, WindowNode node)
{
    if (ws.contains(node.id))
        throw Error(ErrorCode::DuplicateWindow, "window " + id_text(node.id) + " already on workspace");
    ws.nodes.push_front(std::move(node));
    ws.focused = 0;
    return ws;
}

Workspace remove_window(Workspace ws, WindowId id)
{
    auto const pos = ws.position(id);
    if (!pos)
        throw Error(ErrorCode::UnknownWindow, "window " + id_text(id) + " not on workspace");
    ws.nodes.erase(ws.nodes.begin() + static_cast<std::ptrdiff_t>(*pos));
    if (ws.focused) {
        if (*ws.focused == *pos)
            ws.focused = ws.nodes.empty() ? std::nullopt : std::optional<std::size_t>{0};
        else if (*ws.focused > *pos)
            --*ws.focused;
    }
    return ws;
}

Workspace cycle_focus(Workspace ws, FocusDirection direction)
{
    if (ws.nodes.empty())
        return ws;
    auto const n = ws.nodes.size();
    if (!ws.focused) {
        ws.focused = 0;
        return ws;
    }
    ws.focused = direction == FocusDirection::Next ? (*ws.focused + 1) % n : (*ws.focused + n - 1) % n;
    return ws;
}

WmState move_window(WmState state, WindowId id, int target)
{
    auto const home = state.home_of(id);
    if (!home)
        throw Error(ErrorCode::UnknownWindow, "window " + id_text(id) + " is not managed");
    auto& dest = state.at(target);
    if (*home == target)
        return state;

    auto& src = state.at(*home);
    WindowNode node = src.nodes[*src.position(id)];
    src = remove_window(std::move(src), id);
    dest.nodes.push_back(std::move(node));
    if (!dest.focused)
        dest.focused = dest.nodes.size() - 1;
    return state;
}

SwitchResult switch_workspace(WmState state, int target)
{
    state.at(target);
    SwitchResult result;
    if (target == state.active) {
        result.state = std::move(state);
        return result;
    }

    auto const before = visible_windows(state);
    for (auto const& node : state.current().nodes) {
        if (!node.pinned)
            result.to_unmap.push_back(node.id);
    }
    for (auto const& node : state.at(target).nodes) {
        if (std::find(before.begin(), before.end(), node.id) == before.end())
            result.to_map.push_back(node.id);
    }
    state.active = target;
    result.state = std::move(state);
    return result;
}

std::vector<WindowId> visible_windows(WmState const& state)
{
    std::vector<WindowId> ids;
    for (auto const& node : state.current().nodes)
        ids.push_back(node.id);
    for (auto const& ws : state.workspaces) {
        if (ws.index == state.active)
            continue;
        for (auto const& node : ws.nodes) {
            if (node.pinned)
                ids.push_back(node.id);
        }
    }
    return ids;
}

bool is_visible(WmState const& state, WindowId id)
{
    auto const home = state.home_of(id);
    if (!home)
        return false;
    return *home == state.active || state.find(id)->pinned;
}

bool invariants_hold(WmState const& state)
{
    if (!state.in_range(state.active))
        return false;
    std::unordered_set<WindowId> seen;
    for (std::size_t i = 0; i < state.workspaces.size(); ++i) {
        auto const& ws = state.workspaces[i];
        if (ws.index != static_cast<int>(i) + 1)
            return false;
        if (ws.focused && *ws.focused >= ws.nodes.size())
            return false;
        if (ws.params.master_ratio < kMinMasterRatio || ws.params.master_ratio > kMaxMasterRatio)
            return false;
        for (auto const& node : ws.nodes) {
            if (raw(node.id) == 0 || !seen.insert(node.id).second)
                return false;
        }
    }
    return true;
}

} // namespace tilewm
