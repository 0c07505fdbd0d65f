#include "tilewm/headless.hpp"

#include "tilewm/error.hpp"

#include <charconv>
#include <unordered_set>

namespace tilewm {

namespace {

[[noreturn]] void malformed(int line, std::string const& what)
{
    throw Error(ErrorCode::MalformedScript, "script line " + std::to_string(line) + ": " + what, line);
}

/// Whitespace-separated tokens; `key="a b"` keeps the quoted run together
/// and drops the quotes.
std::vector<std::string> tokenize(std::string_view line, int line_no)
{
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i >= line.size())
            break;
        std::string tok;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            if (line[i] == '"') {
                auto const close = line.find('"', i + 1);
                if (close == std::string_view::npos)
                    malformed(line_no, "unterminated quote");
                tok.append(line.substr(i + 1, close - i - 1));
                i = close + 1;
            } else {
                tok += line[i++];
            }
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

template <typename T>
T number(std::string const& text, int line_no)
{
    T value{};
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        malformed(line_no, "bad number '" + text + "'");
    return value;
}

WindowId window_id(std::string const& text, int line_no)
{
    return WindowId{number<std::uint32_t>(text, line_no)};
}

} // namespace

SimScript parse_script(std::string_view text, Modifier mod_key)
{
    SimScript script;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto const nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto const tokens = tokenize(line, line_no);
        if (tokens.empty())
            continue;

        ScriptEntry entry;
        entry.line = line_no;
        auto const& verb = tokens[0];
        if (verb == "map") {
            if (tokens.size() < 2)
                malformed(line_no, "map needs an id");
            event::MapRequest ev;
            ev.id = window_id(tokens[1], line_no);
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                auto const& tok = tokens[i];
                if (tok.starts_with("class="))
                    ev.cls = tok.substr(6);
                else if (tok.starts_with("title="))
                    ev.title = tok.substr(6);
                else if (tok == "nodelete")
                    entry.supports_delete = false;
                else
                    malformed(line_no, "unexpected '" + tok + "'");
            }
            entry.event = std::move(ev);
        } else if (verb == "destroy") {
            if (tokens.size() != 2)
                malformed(line_no, "destroy takes exactly one id");
            entry.event = event::DestroyNotify{window_id(tokens[1], line_no)};
        } else if (verb == "key") {
            if (tokens.size() != 2)
                malformed(line_no, "key takes exactly one chord");
            try {
                entry.event = event::KeyPress{parse_chord(tokens[1], mod_key)};
            } catch (Error const& e) {
                malformed(line_no, e.what());
            }
        } else if (verb == "configure") {
            if (tokens.size() != 6)
                malformed(line_no, "configure takes an id and x y w h");
            Rect r{number<int>(tokens[2], line_no), number<int>(tokens[3], line_no), number<int>(tokens[4], line_no),
                   number<int>(tokens[5], line_no)};
            entry.event = event::ConfigureRequest{window_id(tokens[1], line_no), r};
        } else {
            malformed(line_no, "unknown event '" + verb + "'");
        }
        script.entries.push_back(std::move(entry));
    }
    validate_script(script);
    return script;
}

void validate_script(SimScript const& script)
{
    std::unordered_set<WindowId> alive;
    for (auto const& entry : script.entries) {
        if (auto const* map = std::get_if<event::MapRequest>(&entry.event)) {
            if (raw(map->id) == 0)
                malformed(entry.line, "window id 0 is reserved");
            if (!alive.insert(map->id).second)
                malformed(entry.line, "window " + std::to_string(raw(map->id)) + " mapped twice");
        } else if (auto const* destroy = std::get_if<event::DestroyNotify>(&entry.event)) {
            alive.erase(destroy->id);
        }
    }
}

std::string format_log(CommandLog const& log)
{
    std::string out;
    for (auto const& command : log) {
        out += format_command(command);
        out += '\n';
    }
    return out;
}

HeadlessBackend::HeadlessBackend(SimScript script, Rect screen, bool other_manager)
    : script_(script.entries.begin(), script.entries.end())
    , screen_(screen)
    , other_manager_(other_manager)
{ }

void HeadlessBackend::acquire(Config const& config)
{
    if (other_manager_)
        throw Error(ErrorCode::AlreadyManaged, "another window manager is already running");
    managed_ = true;
    grabbed_.clear();
    for (auto const& [chord, action] : config.bindings)
        grabbed_.insert(chord);
}

std::optional<Event> HeadlessBackend::next_event()
{
    while (true) {
        if (!pending_.empty()) {
            auto ev = std::move(pending_.front());
            pending_.pop_front();
            if (auto const* d = std::get_if<event::DestroyNotify>(&ev)) {
                if (!exists(d->id))
                    continue;
                clients_.erase(d->id);
                mapped_.erase(d->id);
            }
            return ev;
        }
        if (script_.empty())
            return std::nullopt;

        auto entry = std::move(script_.front());
        script_.pop_front();
        if (auto const* map = std::get_if<event::MapRequest>(&entry.event)) {
            clients_[map->id] = Client{entry.supports_delete, std::nullopt};
        } else if (auto const* d = std::get_if<event::DestroyNotify>(&entry.event)) {
            clients_.erase(d->id);
            mapped_.erase(d->id);
        } else if (auto const* key = std::get_if<event::KeyPress>(&entry.event)) {
            // ungrabbed keys go to the focused client, not the manager
            if (!grabbed_.contains(key->chord))
                continue;
        }
        return std::move(entry.event);
    }
}

void HeadlessBackend::violation(std::string what)
{
    violations_.push_back(std::move(what));
}

void HeadlessBackend::execute(DisplayCommand const& command)
{
    log_.push_back(command);
    if (auto const target = command_target(command); target && !exists(*target)) {
        violation(format_command(command) + ": no such window");
        return;
    }

    if (auto const* c = std::get_if<cmd::Map>(&command)) {
        if (!mapped_.insert(c->id).second)
            violation("map " + std::to_string(raw(c->id)) + ": already mapped");
    } else if (auto const* c = std::get_if<cmd::Unmap>(&command)) {
        if (mapped_.erase(c->id) == 0)
            violation("unmap " + std::to_string(raw(c->id)) + ": not mapped");
    } else if (auto const* c = std::get_if<cmd::Configure>(&command)) {
        clients_[c->id].geometry = c->geometry;
    } else if (auto const* c = std::get_if<cmd::SetInputFocus>(&command)) {
        if (!mapped_.contains(c->id))
            violation("focus " + std::to_string(raw(c->id)) + ": window not viewable");
    } else if (auto const* c = std::get_if<cmd::CloseGracefully>(&command)) {
        if (!clients_[c->id].supports_delete)
            execute(cmd::KillClient{c->id});
        else
            pending_.push_back(event::DestroyNotify{c->id});
    } else if (auto const* c = std::get_if<cmd::KillClient>(&command)) {
        pending_.push_back(event::DestroyNotify{c->id});
    }
}

std::optional<Rect> HeadlessBackend::geometry(WindowId id) const
{
    auto const it = clients_.find(id);
    if (it == clients_.end())
        return std::nullopt;
    return it->second.geometry;
}

SimResult simulate(SimScript const& script, Config const& config, Rect screen)
{
    validate_script(script);
    HeadlessBackend backend(script, screen);
    backend.acquire(config);
    auto initial = WmState::make(config.workspaces, backend.screen(), config.params);
    auto loop = run_event_loop(backend, std::move(initial), config);
    return {std::move(loop.state), backend.log(), backend.violations(), loop.exit_status};
}

} // namespace tilewm
