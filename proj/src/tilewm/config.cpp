#include "tilewm/config.hpp"

#include "tilewm/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <system_error>

namespace tilewm {

namespace {

std::string_view trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line)
{
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
            return line.substr(0, i);
    }
    return line;
}

char fold(char c)
{
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

[[noreturn]] void fail(ErrorCode code, int line, std::string const& what)
{
    throw Error(code, "line " + std::to_string(line) + ": " + what, line);
}

template <typename T>
std::optional<T> parse_number(std::string_view text)
{
    T value{};
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    auto const [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::optional<bool> parse_bool(std::string_view text)
{
    if (text == "true")
        return true;
    if (text == "false")
        return false;
    return std::nullopt;
}

std::vector<std::string_view> split_ws(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
        auto const start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(text.substr(start, i - start));
    }
    return out;
}

struct PendingBinding {
    int line;
    std::string chord;
    Action action;
};

struct PendingRule {
    int line;
    Rule rule;
};

Action parse_action(std::string_view rhs, int line)
{
    auto const space = rhs.find_first_of(" \t");
    auto const name = rhs.substr(0, space);
    auto const arg = space == std::string_view::npos ? std::string_view{} : trim(rhs.substr(space));

    auto const kind = action_from_name(name);
    if (!kind)
        fail(ErrorCode::UnknownAction, line, "unknown action '" + std::string(name) + "'");

    switch (*kind) {
    case ActionKind::Spawn:
        if (arg.empty())
            fail(ErrorCode::SyntaxError, line, "spawn needs a command");
        return Action::spawn(std::string(arg));
    case ActionKind::View:
    case ActionKind::MoveTo: {
        auto const ws = parse_number<int>(arg);
        if (!ws)
            fail(ErrorCode::SyntaxError, line, "expected a workspace number");
        return *kind == ActionKind::View ? Action::view(*ws) : Action::move_to(*ws);
    }
    case ActionKind::SetLayout:
        if (arg == "ms" || arg == "master_stack")
            return Action::set_layout(LayoutKind::MasterStack);
        if (arg == "mono" || arg == "monocle")
            return Action::set_layout(LayoutKind::Monocle);
        fail(ErrorCode::SyntaxError, line, "set_layout expects ms or mono");
    default:
        if (!arg.empty())
            fail(ErrorCode::SyntaxError, line, "action takes no argument");
        return Action::simple(*kind);
    }
}

Rule parse_rule(std::string_view body, int line)
{
    auto const tokens = split_ws(body);
    if (tokens.empty() || !tokens.front().starts_with("class="))
        fail(ErrorCode::SyntaxError, line, "rule must start with class=");

    Rule rule;
    rule.class_glob = std::string(tokens.front().substr(6));
    if (rule.class_glob.empty())
        fail(ErrorCode::SyntaxError, line, "empty class pattern");

    std::map<std::string_view, bool> seen;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const tok = tokens[i];
        auto const eq = tok.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorCode::SyntaxError, line, "expected key=value, got '" + std::string(tok) + "'");
        auto const key = tok.substr(0, eq);
        auto const value = tok.substr(eq + 1);
        if (seen[key])
            fail(ErrorCode::SyntaxError, line, "repeated rule field '" + std::string(key) + "'");
        seen[key] = true;

        if (key == "title") {
            if (value.empty())
                fail(ErrorCode::SyntaxError, line, "empty title pattern");
            rule.title_glob = std::string(value);
        } else if (key == "workspace") {
            auto const ws = parse_number<int>(value);
            if (!ws)
                fail(ErrorCode::SyntaxError, line, "workspace must be an integer");
            rule.workspace = *ws;
        } else if (key == "state") {
            if (value == "floating")
                rule.start_state = StartState::Floating;
            else if (value == "fullscreen")
                rule.start_state = StartState::Fullscreen;
            else
                fail(ErrorCode::SyntaxError, line, "state must be floating or fullscreen");
        } else if (key == "pinned") {
            auto const flag = parse_bool(value);
            if (!flag)
                fail(ErrorCode::SyntaxError, line, "pinned must be true or false");
            rule.pinned = *flag;
        } else {
            fail(ErrorCode::SyntaxError, line, "unknown rule field '" + std::string(key) + "'");
        }
    }
    return rule;
}

void apply_general(Config& config, std::string_view key, std::string_view value, int line)
{
    if (key == "workspaces") {
        auto const n = parse_number<int>(value);
        if (!n)
            fail(ErrorCode::SyntaxError, line, "workspaces must be an integer");
        if (*n < 1 || *n > kMaxWorkspaces)
            fail(ErrorCode::ValueOutOfRange, line, "workspaces must be in [1, 32]");
        config.workspaces = *n;
    } else if (key == "master_ratio") {
        auto const r = parse_number<double>(value);
        if (!r)
            fail(ErrorCode::SyntaxError, line, "master_ratio must be a number");
        if (!(*r >= kMinMasterRatio && *r <= kMaxMasterRatio))
            fail(ErrorCode::ValueOutOfRange, line, "master_ratio must be in [0.05, 0.95]");
        config.params.master_ratio = *r;
    } else if (key == "ratio_step") {
        auto const s = parse_number<double>(value);
        if (!s)
            fail(ErrorCode::SyntaxError, line, "ratio_step must be a number");
        if (!(*s > 0.0 && *s <= kMaxMasterRatio - kMinMasterRatio))
            fail(ErrorCode::ValueOutOfRange, line, "ratio_step must be in (0, 0.9]");
        config.params.ratio_step = *s;
    } else if (key == "gap") {
        auto const g = parse_number<int>(value);
        if (!g)
            fail(ErrorCode::SyntaxError, line, "gap must be an integer");
        if (*g < 0 || *g > kMaxGap)
            fail(ErrorCode::ValueOutOfRange, line, "gap must be in [0, 1000]");
        config.params.gap = *g;
    } else if (key == "modifier") {
        auto const mod = modifier_from_name(value);
        if (!mod)
            fail(ErrorCode::ValueOutOfRange, line, "modifier must be alt, ctrl, shift or super");
        config.modifier = *mod;
    } else if (key == "status") {
        auto const flag = parse_bool(value);
        if (!flag)
            fail(ErrorCode::SyntaxError, line, "status must be true or false");
        config.status_enabled = *flag;
    } else {
        fail(ErrorCode::SyntaxError, line, "unknown setting '" + std::string(key) + "'");
    }
}

} // namespace

Bindings default_bindings(Modifier mod, int workspaces)
{
    auto chord = [mod](std::string key, Modifier extra = Modifier::None) {
        return KeyChord{mod | extra, std::move(key)};
    };
    Bindings b;
    b[chord("return")] = Action::spawn(kDefaultTerminal);
    b[chord("j")] = Action::simple(ActionKind::FocusNext);
    b[chord("k")] = Action::simple(ActionKind::FocusPrev);
    b[chord("h")] = Action::simple(ActionKind::ShrinkMaster);
    b[chord("l")] = Action::simple(ActionKind::GrowMaster);
    b[chord("m")] = Action::simple(ActionKind::ToggleFullscreen);
    b[chord("f")] = Action::simple(ActionKind::ToggleFloating);
    for (int i = 1; i <= std::min(9, workspaces); ++i) {
        b[chord(std::to_string(i))] = Action::view(i);
        b[chord(std::to_string(i), Modifier::Shift)] = Action::move_to(i);
    }
    b[chord("q", Modifier::Shift)] = Action::simple(ActionKind::Close);
    b[chord("e", Modifier::Shift)] = Action::simple(ActionKind::Quit);
    return b;
}

Config parse_config(std::string_view text)
{
    enum class Section { None, General, Keys, Rules };

    Config config;
    Section section = Section::None;
    bool saw_keys = false;
    std::vector<PendingBinding> pending_bindings;
    std::vector<PendingRule> pending_rules;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto const nl = text.find('\n', pos);
        auto const raw_line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto const line = trim(strip_comment(raw_line));
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line == "[general]") {
                section = Section::General;
            } else if (line == "[keys]") {
                section = Section::Keys;
                saw_keys = true;
            } else if (line == "[rules]") {
                section = Section::Rules;
            } else {
                fail(ErrorCode::SyntaxError, line_no, "unknown section " + std::string(line));
            }
            continue;
        }

        switch (section) {
        case Section::None:
            fail(ErrorCode::SyntaxError, line_no, "setting outside of any section");
        case Section::General: {
            auto const eq = line.find('=');
            if (eq == std::string_view::npos)
                fail(ErrorCode::SyntaxError, line_no, "expected key = value");
            apply_general(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
            break;
        }
        case Section::Keys: {
            auto const eq = line.find('=');
            if (eq == std::string_view::npos)
                fail(ErrorCode::SyntaxError, line_no, "expected chord = action");
            auto const chord = trim(line.substr(0, eq));
            auto const rhs = trim(line.substr(eq + 1));
            if (chord.empty() || rhs.empty())
                fail(ErrorCode::SyntaxError, line_no, "expected chord = action");
            pending_bindings.push_back({line_no, std::string(chord), parse_action(rhs, line_no)});
            break;
        }
        case Section::Rules:
            pending_rules.push_back({line_no, parse_rule(line, line_no)});
            break;
        }
    }

    // chords and ranges depend on [general], which may come last
    if (saw_keys) {
        config.bindings.clear();
        for (auto const& pb : pending_bindings) {
            KeyChord chord;
            try {
                chord = parse_chord(pb.chord, config.modifier);
            } catch (Error const& e) {
                fail(ErrorCode::SyntaxError, pb.line, e.what());
            }
            if (pb.action.kind == ActionKind::View || pb.action.kind == ActionKind::MoveTo) {
                if (pb.action.workspace < 1 || pb.action.workspace > config.workspaces)
                    fail(ErrorCode::ValueOutOfRange, pb.line, "workspace index out of range");
            }
            if (!config.bindings.emplace(chord, pb.action).second)
                fail(ErrorCode::DuplicateBinding, pb.line, "chord " + format_chord(chord) + " bound twice");
        }
    } else {
        config.bindings = default_bindings(config.modifier, config.workspaces);
    }

    for (auto& pr : pending_rules) {
        if (pr.rule.workspace && (*pr.rule.workspace < 1 || *pr.rule.workspace > config.workspaces))
            fail(ErrorCode::ValueOutOfRange, pr.line, "rule workspace out of range");
        config.rules.push_back(std::move(pr.rule));
    }
    return config;
}

std::string serialize_config(Config const& config)
{
    std::ostringstream out;
    out << "[general]\n";
    out << "workspaces = " << config.workspaces << '\n';
    out << "master_ratio = " << format_double(config.params.master_ratio) << '\n';
    out << "ratio_step = " << format_double(config.params.ratio_step) << '\n';
    out << "gap = " << config.params.gap << '\n';
    out << "modifier = " << modifier_name(config.modifier) << '\n';
    out << "status = " << (config.status_enabled ? "true" : "false") << '\n';

    out << "\n[keys]\n";
    for (auto const& [chord, action] : config.bindings)
        out << format_chord(chord) << " = " << format_action(action) << '\n';

    out << "\n[rules]\n";
    for (auto const& rule : config.rules) {
        out << "class=" << rule.class_glob;
        if (rule.title_glob)
            out << " title=" << *rule.title_glob;
        if (rule.workspace)
            out << " workspace=" << *rule.workspace;
        if (rule.start_state == StartState::Floating)
            out << " state=floating";
        else if (rule.start_state == StartState::Fullscreen)
            out << " state=fullscreen";
        if (rule.pinned)
            out << " pinned=true";
        out << '\n';
    }
    return out.str();
}

bool glob_match(std::string_view pattern, std::string_view text, bool case_sensitive)
{
    auto eq = [case_sensitive](char a, char b) { return case_sensitive ? a == b : fold(a) == fold(b); };

    std::size_t p = 0;
    std::size_t t = 0;
    std::size_t star = std::string_view::npos;
    std::size_t resume = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || (pattern[p] != '*' && eq(pattern[p], text[t])))) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            resume = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++resume;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

RuleOutcome match_rules(std::vector<Rule> const& rules, std::string_view cls, std::string_view title)
{
    for (auto const& rule : rules) {
        if (!glob_match(rule.class_glob, cls, true))
            continue;
        if (rule.title_glob && !glob_match(*rule.title_glob, title, false))
            continue;
        return {rule.workspace, rule.start_state, rule.pinned};
    }
    return {};
}

} // namespace tilewm
