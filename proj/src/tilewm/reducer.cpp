#include "tilewm/reducer.hpp"

#include "tilewm/status.hpp"

#include <type_traits>

namespace tilewm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Commands = std::vector<DisplayCommand>;

void append(Commands& out, Commands const& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

/// Border and input-focus updates for a focus change on the active
/// workspace. `previous` only gets its border reset if it still exists.
void refocus(Commands& out, WmState const& state, std::optional<WindowId> previous)
{
    auto const next = state.focus();
    if (previous == next)
        return;
    if (previous && state.find(*previous))
        out.push_back(cmd::SetBorder{*previous, false});
    if (next) {
        out.push_back(cmd::SetBorder{*next, true});
        out.push_back(cmd::SetInputFocus{*next});
    }
}

void emit_status(Commands& out, WmState const& state, Config const& config)
{
    if (config.status_enabled)
        out.push_back(cmd::EmitStatus{render_status(state)});
}

Transition on_map(WmState state, event::MapRequest const& ev, Config const& config)
{
    if (raw(ev.id) == 0 || state.find(ev.id))
        return {std::move(state), {}};

    auto const outcome = match_rules(config.rules, ev.cls, ev.title);
    int const target = outcome.workspace && state.in_range(*outcome.workspace) ? *outcome.workspace : state.active;

    WindowNode node;
    node.id = ev.id;
    node.cls = ev.cls;
    node.title = ev.title;
    node.floating = outcome.start_state == StartState::Floating;
    node.fullscreen = outcome.start_state == StartState::Fullscreen;
    node.pinned = outcome.pinned;

    auto const previous = state.focus();
    state.at(target) = insert_window(std::move(state.at(target)), std::move(node));

    Commands out;
    if (target == state.active) {
        append(out, retile(state));
        out.push_back(cmd::Map{ev.id});
        refocus(out, state, previous);
    } else if (is_visible(state, ev.id)) {
        out.push_back(cmd::Map{ev.id});
        out.push_back(cmd::SetBorder{ev.id, false});
    }
    emit_status(out, state, config);
    return {std::move(state), std::move(out)};
}

Transition on_destroy(WmState state, event::DestroyNotify const& ev, Config const& config)
{
    auto const home = state.home_of(ev.id);
    if (!home)
        return {std::move(state), {}};

    auto const previous = state.focus();
    state.at(*home) = remove_window(std::move(state.at(*home)), ev.id);

    Commands out;
    if (*home == state.active) {
        append(out, retile(state));
        refocus(out, state, previous);
    }
    emit_status(out, state, config);
    return {std::move(state), std::move(out)};
}

Transition on_view(WmState state, int target, Config const& config)
{
    Commands out;
    if (!state.in_range(target))
        return {std::move(state), {}};
    if (target == state.active) {
        emit_status(out, state, config);
        return {std::move(state), std::move(out)};
    }

    auto switched = switch_workspace(std::move(state), target);
    for (auto id : switched.to_unmap)
        out.push_back(cmd::Unmap{id});
    append(out, retile(switched.state));
    auto const focus = switched.state.focus();
    for (auto id : switched.to_map) {
        out.push_back(cmd::Map{id});
        out.push_back(cmd::SetBorder{id, id == focus});
    }
    if (focus)
        out.push_back(cmd::SetInputFocus{*focus});
    emit_status(out, switched.state, config);
    return {std::move(switched.state), std::move(out)};
}

Transition on_move(WmState state, int target, Config const& config)
{
    auto const focus = state.focus();
    if (!state.in_range(target) || !focus)
        return {std::move(state), {}};

    Commands out;
    if (target != state.active) {
        state = move_window(std::move(state), *focus, target);
        if (!is_visible(state, *focus))
            out.push_back(cmd::Unmap{*focus});
        append(out, retile(state));
        refocus(out, state, focus);
    }
    emit_status(out, state, config);
    return {std::move(state), std::move(out)};
}

Transition on_key(WmState state, event::KeyPress const& ev, Config const& config)
{
    auto const action = lookup_binding(config.bindings, ev.chord);
    if (!action)
        return {std::move(state), {}};

    Commands out;
    auto& ws = state.current();
    switch (action->kind) {
    case ActionKind::Spawn:
        out.push_back(cmd::Spawn{action->command});
        break;
    case ActionKind::Close:
        if (auto focus = state.focus())
            out.push_back(cmd::CloseGracefully{*focus});
        break;
    case ActionKind::Quit:
        out.push_back(cmd::ExitLoop{});
        return {std::move(state), std::move(out)};
    case ActionKind::FocusNext:
    case ActionKind::FocusPrev: {
        auto const previous = state.focus();
        ws = cycle_focus(std::move(ws), action->kind == ActionKind::FocusNext ? FocusDirection::Next
                                                                               : FocusDirection::Prev);
        refocus(out, state, previous);
        break;
    }
    case ActionKind::GrowMaster:
    case ActionKind::ShrinkMaster: {
        double const step = ws.params.ratio_step;
        ws.params = adjust_ratio(ws.params, action->kind == ActionKind::GrowMaster ? step : -step);
        append(out, retile(state));
        break;
    }
    case ActionKind::ToggleFloating:
        if (auto* node = ws.focused_node()) {
            node->floating = !node->floating;
            if (node->floating) {
                node->fullscreen = false;
                if (node->float_geometry)
                    out.push_back(cmd::Configure{node->id, *node->float_geometry});
            }
            append(out, retile(state));
        }
        break;
    case ActionKind::ToggleFullscreen:
        if (auto* node = ws.focused_node()) {
            node->fullscreen = !node->fullscreen;
            if (node->fullscreen)
                node->floating = false;
            append(out, retile(state));
        }
        break;
    case ActionKind::SetLayout:
        ws.layout = action->layout;
        append(out, retile(state));
        break;
    case ActionKind::View:
        return on_view(std::move(state), action->workspace, config);
    case ActionKind::MoveTo:
        return on_move(std::move(state), action->workspace, config);
    }
    emit_status(out, state, config);
    return {std::move(state), std::move(out)};
}

Transition on_configure(WmState state, event::ConfigureRequest const& ev)
{
    auto* node = state.find(ev.id);
    if (!node || !ev.geometry.valid())
        return {std::move(state), {}};

    Commands out;
    if (node->floating) {
        node->float_geometry = ev.geometry;
        if (is_visible(state, ev.id))
            out.push_back(cmd::Configure{ev.id, ev.geometry});
    } else if (state.current().contains(ev.id)) {
        // tiled windows are told their layout slot, not what they asked for
        for (auto const& c : retile(state)) {
            if (command_target(c) == ev.id)
                out.push_back(c);
        }
    }
    return {std::move(state), std::move(out)};
}

} // namespace

std::optional<WindowId> command_target(DisplayCommand const& command)
{
    return std::visit(
        [](auto const& c) -> std::optional<WindowId> {
            if constexpr (requires { c.id; })
                return c.id;
            else
                return std::nullopt;
        },
        command);
}

std::string format_command(DisplayCommand const& command)
{
    auto id = [](WindowId w) { return std::to_string(raw(w)); };
    return std::visit(
        overloaded{
            [&](cmd::Map const& c) { return "map " + id(c.id); },
            [&](cmd::Unmap const& c) { return "unmap " + id(c.id); },
            [&](cmd::Configure const& c) {
                auto const& g = c.geometry;
                return "configure " + id(c.id) + ' ' + std::to_string(g.x) + ' ' + std::to_string(g.y) + ' '
                       + std::to_string(g.w) + ' ' + std::to_string(g.h);
            },
            [&](cmd::SetInputFocus const& c) { return "focus " + id(c.id); },
            [&](cmd::SetBorder const& c) { return "border " + id(c.id) + (c.focused ? " on" : " off"); },
            [&](cmd::CloseGracefully const& c) { return "close " + id(c.id); },
            [&](cmd::KillClient const& c) { return "kill " + id(c.id); },
            [](cmd::Spawn const& c) { return "spawn " + c.command; },
            [](cmd::EmitStatus const& c) { return "status " + c.text; },
            [](cmd::ExitLoop const&) { return std::string("exit"); },
        },
        command);
}

std::string format_event(Event const& event)
{
    return std::visit(
        overloaded{
            [](event::MapRequest const& e) {
                return "map " + std::to_string(raw(e.id)) + " class=" + e.cls + " title=" + e.title;
            },
            [](event::DestroyNotify const& e) { return "destroy " + std::to_string(raw(e.id)); },
            [](event::KeyPress const& e) { return "key " + format_chord(e.chord); },
            [](event::ConfigureRequest const& e) {
                auto const& g = e.geometry;
                return "configure " + std::to_string(raw(e.id)) + ' ' + std::to_string(g.x) + ' '
                       + std::to_string(g.y) + ' ' + std::to_string(g.w) + ' ' + std::to_string(g.h);
            },
        },
        event);
}

std::vector<DisplayCommand> retile(WmState const& state)
{
    auto const& ws = state.current();
    std::size_t tiled = 0;
    for (auto const& node : ws.nodes)
        tiled += !node.floating && !node.fullscreen;

    auto const cells = apply_layout(ws.layout, state.screen, tiled, ws.params);
    Commands out;
    std::size_t slot = 0;
    for (auto const& node : ws.nodes) {
        if (node.floating)
            continue;
        out.push_back(cmd::Configure{node.id, node.fullscreen ? state.screen : cells[slot++]});
    }
    return out;
}

Transition reduce(WmState state, Event const& event, Config const& config)
{
    return std::visit(
        overloaded{
            [&](event::MapRequest const& e) { return on_map(std::move(state), e, config); },
            [&](event::DestroyNotify const& e) { return on_destroy(std::move(state), e, config); },
            [&](event::KeyPress const& e) { return on_key(std::move(state), e, config); },
            [&](event::ConfigureRequest const& e) { return on_configure(std::move(state), e); },
        },
        event);
}

} // namespace tilewm
