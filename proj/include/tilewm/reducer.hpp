#pragma once

#include "tilewm/config.hpp"
#include "tilewm/input.hpp"
#include "tilewm/workspace.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tilewm {

namespace event {

struct MapRequest {
    WindowId id{};
    std::string cls;
    std::string title;
    bool operator==(MapRequest const&) const = default;
};

struct DestroyNotify {
    WindowId id{};
    bool operator==(DestroyNotify const&) const = default;
};

struct KeyPress {
    KeyChord chord;
    bool operator==(KeyPress const&) const = default;
};

struct ConfigureRequest {
    WindowId id{};
    Rect geometry;
    bool operator==(ConfigureRequest const&) const = default;
};

} // namespace event

using Event = std::variant<event::MapRequest, event::DestroyNotify, event::KeyPress, event::ConfigureRequest>;

namespace cmd {

struct Map { WindowId id{}; bool operator==(Map const&) const = default; };
struct Unmap { WindowId id{}; bool operator==(Unmap const&) const = default; };
struct Configure { WindowId id{}; Rect geometry; bool operator==(Configure const&) const = default; };
struct SetInputFocus { WindowId id{}; bool operator==(SetInputFocus const&) const = default; };
struct SetBorder { WindowId id{}; bool focused = false; bool operator==(SetBorder const&) const = default; };
struct CloseGracefully { WindowId id{}; bool operator==(CloseGracefully const&) const = default; };
struct KillClient { WindowId id{}; bool operator==(KillClient const&) const = default; };
struct Spawn { std::string command; bool operator==(Spawn const&) const = default; };
struct EmitStatus { std::string text; bool operator==(EmitStatus const&) const = default; };
struct ExitLoop { bool operator==(ExitLoop const&) const = default; };

} // namespace cmd

using DisplayCommand = std::variant<cmd::Map, cmd::Unmap, cmd::Configure, cmd::SetInputFocus, cmd::SetBorder,
                                    cmd::CloseGracefully, cmd::KillClient, cmd::Spawn, cmd::EmitStatus,
                                    cmd::ExitLoop>;

/// Window the command refers to, if any.
std::optional<WindowId> command_target(DisplayCommand const& command);

/// One line of the command log, e.g. `configure 3 0 0 1056 1080`.
std::string format_command(DisplayCommand const& command);
std::string format_event(Event const& event);

struct Transition {
    WmState state;
    std::vector<DisplayCommand> commands;
};

/// Pure transition function of the manager. Never throws on stray input:
/// unknown ids, unbound chords and out-of-range targets leave the state
/// unchanged and emit nothing.
Transition reduce(WmState state, Event const& event, Config const& config);

/// Configure commands placing every tiled window of the active workspace
/// per its layout, and fullscreen ones over the whole screen. Floating
/// windows are left alone.
std::vector<DisplayCommand> retile(WmState const& state);

} // namespace tilewm
