#include "tilewm/input.hpp"

#include "tilewm/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace tilewm {

namespace {

std::string lowercase(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

constexpr std::array<std::pair<Modifier, std::string_view>, 4> kModifierNames{{
    {Modifier::Alt, "alt"},
    {Modifier::Ctrl, "ctrl"},
    {Modifier::Shift, "shift"},
    {Modifier::Super, "super"},
}};

constexpr std::array<std::pair<ActionKind, std::string_view>, 12> kActionNames{{
    {ActionKind::Spawn, "spawn"},
    {ActionKind::Close, "close"},
    {ActionKind::Quit, "quit"},
    {ActionKind::FocusNext, "focus_next"},
    {ActionKind::FocusPrev, "focus_prev"},
    {ActionKind::GrowMaster, "grow_master"},
    {ActionKind::ShrinkMaster, "shrink_master"},
    {ActionKind::ToggleFloating, "toggle_floating"},
    {ActionKind::ToggleFullscreen, "toggle_fullscreen"},
    {ActionKind::SetLayout, "set_layout"},
    {ActionKind::View, "view"},
    {ActionKind::MoveTo, "move_to"},
}};

} // namespace

std::optional<Modifier> modifier_from_name(std::string_view name)
{
    auto const lower = lowercase(name);
    for (auto const& [mod, text] : kModifierNames) {
        if (lower == text)
            return mod;
    }
    return std::nullopt;
}

std::string_view modifier_name(Modifier single)
{
    for (auto const& [mod, text] : kModifierNames) {
        if (mod == single)
            return text;
    }
    return "none";
}

KeyChord parse_chord(std::string_view text, Modifier mod_key)
{
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        auto const plus = text.find('+', start);
        tokens.push_back(text.substr(start, plus == std::string_view::npos ? plus : plus - start));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }

    KeyChord chord;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        auto const lower = lowercase(tokens[i]);
        if (lower == "mod") {
            chord.modifiers = chord.modifiers | mod_key;
            continue;
        }
        auto const mod = modifier_from_name(lower);
        if (!mod)
            throw Error(ErrorCode::UnknownModifier, "unknown modifier '" + std::string(tokens[i]) + "'");
        chord.modifiers = chord.modifiers | *mod;
    }
    chord.key = lowercase(tokens.back());
    if (chord.key.empty())
        throw Error(ErrorCode::EmptyKey, "chord '" + std::string(text) + "' has no key");
    return chord;
}

std::string format_chord(KeyChord const& chord)
{
    std::string out;
    for (auto const& [mod, text] : kModifierNames) {
        if (has(chord.modifiers, mod)) {
            out += text;
            out += '+';
        }
    }
    return out + chord.key;
}

std::string_view action_name(ActionKind kind)
{
    for (auto const& [k, text] : kActionNames) {
        if (k == kind)
            return text;
    }
    return "?";
}

std::optional<ActionKind> action_from_name(std::string_view name)
{
    for (auto const& [kind, text] : kActionNames) {
        if (name == text)
            return kind;
    }
    return std::nullopt;
}

std::string format_action(Action const& action)
{
    std::string out(action_name(action.kind));
    switch (action.kind) {
    case ActionKind::Spawn:
        out += ' ' + action.command;
        break;
    case ActionKind::View:
    case ActionKind::MoveTo:
        out += ' ' + std::to_string(action.workspace);
        break;
    case ActionKind::SetLayout:
        out += ' ';
        out += layout_tag(action.layout);
        break;
    default:
        break;
    }
    return out;
}

std::optional<Action> lookup_binding(Bindings const& bindings, KeyChord const& chord)
{
    auto const it = bindings.find(chord);
    if (it == bindings.end())
        return std::nullopt;
    return it->second;
}

} // namespace tilewm
