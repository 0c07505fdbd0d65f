#pragma once

#include "tilewm/geometry.hpp"
#include "tilewm/input.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilewm {

enum class StartState { None, Floating, Fullscreen };

struct Rule {
    std::string class_glob;
    std::optional<std::string> title_glob;
    std::optional<int> workspace;
    StartState start_state = StartState::None;
    bool pinned = false;

    bool operator==(Rule const&) const = default;
};

struct RuleOutcome {
    std::optional<int> workspace;
    StartState start_state = StartState::None;
    bool pinned = false;

    bool operator==(RuleOutcome const&) const = default;
};

inline constexpr int kDefaultWorkspaceCount = 9;
inline constexpr int kMaxWorkspaces = 32;
inline constexpr int kMaxGap = 1000;
inline constexpr char const* kDefaultTerminal = "xterm";

/// The stock bindings: terminal, focus, master ratio, fullscreen/floating,
/// view and move_to for the first min(9, workspaces) workspaces, close, quit.
Bindings default_bindings(Modifier mod, int workspaces);

struct Config {
    int workspaces = kDefaultWorkspaceCount;
    LayoutParams params;
    Modifier modifier = Modifier::Alt;
    Bindings bindings = default_bindings(Modifier::Alt, kDefaultWorkspaceCount);
    std::vector<Rule> rules;
    bool status_enabled = true;

    bool operator==(Config const&) const = default;
};

/// Parses the INI-style `[general]` / `[keys]` / `[rules]` file. Omitted
/// keys keep their defaults; a file without `[keys]` gets default_bindings
/// for the configured modifier. Errors carry the offending line.
Config parse_config(std::string_view text);

/// Emits every setting explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(Config const& config);

/// `*` matches any run, `?` any single character. No escapes.
bool glob_match(std::string_view pattern, std::string_view text, bool case_sensitive = true);

/// First rule whose class glob matches `cls` (case-sensitive) and whose
/// title glob, if any, matches `title` (case-insensitive).
RuleOutcome match_rules(std::vector<Rule> const& rules, std::string_view cls, std::string_view title);

} // namespace tilewm
