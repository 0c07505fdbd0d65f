#pragma once

#include "tilewm/backend.hpp"

#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tilewm {

struct ScriptEntry {
    int line = 0;
    Event event;
    /// Map entries only: whether the client advertises graceful deletion.
    bool supports_delete = true;
};

/// Injected events, one per line:
///   map <id> class=<glob-free text> title=<text|"quoted text"> [nodelete]
///   destroy <id>
///   key <chord>
///   configure <id> <x> <y> <w> <h>
/// `#` starts a comment, blank lines are skipped.
struct SimScript {
    std::vector<ScriptEntry> entries;
};

/// Throws MalformedScript with the line number. Chords resolve "mod" with
/// `mod_key`.
SimScript parse_script(std::string_view text, Modifier mod_key = Modifier::Alt);

/// Rejects zero ids and ids mapped again while still alive (an id is alive
/// from its map line until an explicit destroy line).
void validate_script(SimScript const& script);

using CommandLog = std::vector<DisplayCommand>;

/// One formatted command per line, each newline-terminated.
std::string format_log(CommandLog const& log);

/// Fake display server. Clients come and go as the script says; the
/// backend tracks which windows exist and which are mapped, and records
/// protocol misuse (mapping a mapped window, unmapping an unmapped one,
/// touching a window that does not exist, focusing an unmapped one).
class HeadlessBackend final : public Backend {
public:
    explicit HeadlessBackend(SimScript script, Rect screen = {0, 0, 1920, 1080}, bool other_manager = false);

    void acquire(Config const& config) override;
    std::optional<Event> next_event() override;
    void execute(DisplayCommand const& command) override;
    Rect screen() const override { return screen_; }

    CommandLog const& log() const { return log_; }
    std::vector<std::string> const& violations() const { return violations_; }
    std::set<WindowId> const& mapped() const { return mapped_; }
    std::optional<Rect> geometry(WindowId id) const;
    std::set<KeyChord> const& grabbed() const { return grabbed_; }

private:
    void violation(std::string what);
    bool exists(WindowId id) const { return clients_.contains(id); }

    struct Client {
        bool supports_delete = true;
        std::optional<Rect> geometry;
    };

    std::deque<ScriptEntry> script_;
    std::deque<Event> pending_;
    Rect screen_;
    bool other_manager_;
    bool managed_ = false;
    std::set<KeyChord> grabbed_;
    std::map<WindowId, Client> clients_;
    std::set<WindowId> mapped_;
    CommandLog log_;
    std::vector<std::string> violations_;
};

struct SimResult {
    WmState state;
    CommandLog log;
    std::vector<std::string> violations;
    int exit_status = 0;
};

/// Validates the script, then drives run_event_loop over a HeadlessBackend
/// from a fresh state sized by `config`.
SimResult simulate(SimScript const& script, Config const& config, Rect screen = {0, 0, 1920, 1080});

} // namespace tilewm
