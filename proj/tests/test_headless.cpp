#include "fuzz.hpp"
#include "tilewm/error.hpp"
#include "tilewm/headless.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tilewm;

namespace {

ErrorCode script_error(std::string_view text, int* line = nullptr)
{
    try {
        validate_script(parse_script(text));
    } catch (Error const& e) {
        if (line)
            *line = e.line().value_or(-1);
        return e.code();
    }
    FAIL("script accepted: " << text);
    return ErrorCode::SyntaxError;
}

SimResult sim(std::string_view text, Config const& cfg = {})
{
    return simulate(parse_script(text, cfg.modifier), cfg);
}

std::vector<std::string> lines(CommandLog const& log)
{
    std::vector<std::string> out;
    for (auto const& c : log)
        out.push_back(format_command(c));
    return out;
}

} // namespace

TEST_CASE("script grammar")
{
    auto const s = parse_script("# header\n\nmap 4 class=Zathura title=\"b two.pdf\" nodelete\n"
                                "key mod+j\nconfigure 4 1 2 30 40\ndestroy 4\n");
    REQUIRE(s.entries.size() == 4);
    CHECK(s.entries[0].line == 3);
    CHECK(s.entries[0].event == Event{event::MapRequest{WindowId{4}, "Zathura", "b two.pdf"}});
    CHECK_FALSE(s.entries[0].supports_delete);
    CHECK(s.entries[1].event == Event{event::KeyPress{KeyChord{Modifier::Alt, "j"}}});
    CHECK(s.entries[2].event == Event{event::ConfigureRequest{WindowId{4}, {1, 2, 30, 40}}});
    CHECK(s.entries[3].event == Event{event::DestroyNotify{WindowId{4}}});
}

TEST_CASE("malformed scripts report the line")
{
    int line = 0;
    CHECK(script_error("map 1 class=A\nmap 1 class=B\n", &line) == ErrorCode::MalformedScript);
    CHECK(line == 2);
    CHECK(script_error("\n\njump 3\n", &line) == ErrorCode::MalformedScript);
    CHECK(line == 3);
    CHECK(script_error("map 0 class=A\n") == ErrorCode::MalformedScript);
    CHECK(script_error("map x class=A\n") == ErrorCode::MalformedScript);
    CHECK(script_error("configure 1 0 0 10\n") == ErrorCode::MalformedScript);
    CHECK(script_error("key mod+\n") == ErrorCode::MalformedScript);
    CHECK(script_error("map 1 class=A title=\"open\n") == ErrorCode::MalformedScript);
    // reuse after destroy is fine
    CHECK_NOTHROW(validate_script(parse_script("map 1 class=A\ndestroy 1\nmap 1 class=A\n")));
}

TEST_CASE("empty script emits only the initial status")
{
    auto const r = sim("");
    CHECK(lines(r.log) == std::vector<std::string>{"status 1*:0 2:0 3:0 4:0 5:0 6:0 7:0 8:0 9:0|ms|0.55|"});
    CHECK(r.violations.empty());
    CHECK(r.exit_status == 0);
}

TEST_CASE("map then view round trip keeps the backend consistent")
{
    auto const r = sim("map 1 class=A title=a\nmap 2 class=B title=b\nkey mod+2\nkey mod+1\n");
    CHECK(r.violations.empty());
    auto const l = lines(r.log);
    CHECK(std::find(l.begin(), l.end(), "unmap 1") != l.end());
    CHECK(l.back() == "status 1*:2 2:0 3:0 4:0 5:0 6:0 7:0 8:0 9:0|ms|0.55|b");
}

TEST_CASE("ungrabbed keys never reach the manager")
{
    Config cfg;
    cfg.bindings = parse_config("[keys]\nmod+q = quit\n").bindings;
    auto const r = sim("map 1 class=A\nkey mod+j\nkey ctrl+c\n", cfg);
    // initial status + map (configure, map, border, focus, status)
    CHECK(r.log.size() == 6);
}

TEST_CASE("close escalates to kill for clients without graceful delete")
{
    auto const r = sim("map 1 class=A nodelete\nmap 2 class=B\nkey mod+shift+q\nkey mod+shift+q\n");
    auto const l = lines(r.log);
    auto has = [&](std::string const& s) { return std::find(l.begin(), l.end(), s) != l.end(); };
    CHECK(has("close 2"));
    CHECK(has("close 1"));
    CHECK(has("kill 1"));
    CHECK_FALSE(has("kill 2"));
    CHECK(r.violations.empty());
    for (auto const& ws : r.state.workspaces)
        CHECK(ws.nodes.empty());
}

TEST_CASE("quit stops the replay")
{
    auto const r = sim("map 1 class=A\nkey mod+shift+e\nmap 2 class=B\n");
    CHECK(lines(r.log).back() == "exit");
    CHECK_FALSE(r.state.find(WindowId{2}));
}

TEST_CASE("another manager holding the display")
{
    HeadlessBackend backend({}, {0, 0, 800, 600}, true);
    try {
        backend.acquire(Config{});
        FAIL("acquired");
    } catch (Error const& e) {
        CHECK(e.code() == ErrorCode::AlreadyManaged);
    }
}

TEST_CASE("the backend flags protocol misuse")
{
    HeadlessBackend b(parse_script("map 1 class=A\n"));
    b.acquire(Config{});
    REQUIRE(b.next_event());
    b.execute(cmd::Map{WindowId{1}});
    b.execute(cmd::Map{WindowId{1}});
    b.execute(cmd::Unmap{WindowId{1}});
    b.execute(cmd::Unmap{WindowId{1}});
    b.execute(cmd::SetInputFocus{WindowId{1}});
    b.execute(cmd::Configure{WindowId{9}, {0, 0, 1, 1}});
    CHECK(b.violations() == std::vector<std::string>{
                                "map 1: already mapped",
                                "unmap 1: not mapped",
                                "focus 1: window not viewable",
                                "configure 9 0 0 1 1: no such window",
                            });
}

TEST_CASE("geometry follows configures")
{
    HeadlessBackend b(parse_script("map 3 class=A\n"));
    b.acquire(Config{});
    b.next_event();
    CHECK(b.geometry(WindowId{3}) == std::nullopt);
    b.execute(cmd::Configure{WindowId{3}, {1, 2, 3, 4}});
    CHECK(b.geometry(WindowId{3}) == Rect{1, 2, 3, 4});
    CHECK(b.grabbed().size() == 27);
}

TEST_CASE("random scripts run without violations")
{
    auto const cfg = fuzz::config();
    for (unsigned seed = 100; seed < 110; ++seed) {
        auto const r = simulate(fuzz::script(seed, 1500, cfg), cfg);
        INFO("seed " << seed);
        CHECK(r.violations.empty());
        CHECK(invariants_hold(r.state));
    }
}
