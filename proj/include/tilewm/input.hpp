#pragma once

#include "tilewm/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tilewm {

enum class Modifier : std::uint8_t {
    None = 0,
    Alt = 1 << 0,
    Ctrl = 1 << 1,
    Shift = 1 << 2,
    Super = 1 << 3,
};

constexpr Modifier operator|(Modifier a, Modifier b)
{
    return static_cast<Modifier>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

constexpr bool has(Modifier set, Modifier flag)
{
    return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(flag)) != 0;
}

/// Returns nullopt for anything that is not alt/ctrl/shift/super
/// (case-insensitive). "mod" is not accepted here; callers resolve it.
std::optional<Modifier> modifier_from_name(std::string_view name);
std::string_view modifier_name(Modifier single);

struct KeyChord {
    Modifier modifiers = Modifier::None;
    /// Lowercased keysym name.
    std::string key;

    auto operator<=>(KeyChord const&) const = default;
    bool operator==(KeyChord const&) const = default;
};

/// Splits on '+'; every token but the last must name a modifier, "mod"
/// standing for `mod_key`. Throws EmptyKey or UnknownModifier.
KeyChord parse_chord(std::string_view text, Modifier mod_key = Modifier::Alt);

/// Canonical form: modifiers in alt, ctrl, shift, super order, then the key.
std::string format_chord(KeyChord const& chord);

enum class ActionKind {
    Spawn,
    Close,
    Quit,
    FocusNext,
    FocusPrev,
    GrowMaster,
    ShrinkMaster,
    ToggleFloating,
    ToggleFullscreen,
    SetLayout,
    View,
    MoveTo,
};

struct Action {
    ActionKind kind = ActionKind::Quit;
    std::string command;                       // Spawn
    int workspace = 0;                         // View, MoveTo
    LayoutKind layout = LayoutKind::MasterStack; // SetLayout

    bool operator==(Action const&) const = default;

    static Action spawn(std::string command) { return {ActionKind::Spawn, std::move(command), 0, LayoutKind::MasterStack}; }
    static Action simple(ActionKind kind) { return {kind, {}, 0, LayoutKind::MasterStack}; }
    static Action view(int ws) { return {ActionKind::View, {}, ws, LayoutKind::MasterStack}; }
    static Action move_to(int ws) { return {ActionKind::MoveTo, {}, ws, LayoutKind::MasterStack}; }
    static Action set_layout(LayoutKind kind) { return {ActionKind::SetLayout, {}, 0, kind}; }
};

std::string_view action_name(ActionKind kind);
std::optional<ActionKind> action_from_name(std::string_view name);

/// `name [arg]` as written on the right-hand side of a key binding.
std::string format_action(Action const& action);

using Bindings = std::map<KeyChord, Action>;

std::optional<Action> lookup_binding(Bindings const& bindings, KeyChord const& chord);

} // namespace tilewm
