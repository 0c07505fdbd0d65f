#include "fuzz.hpp"
#include "oracles.hpp"
#include "tilewm/reducer.hpp"
#include "tilewm/status.hpp"

#include <doctest.h>

#include <set>

using namespace tilewm;

namespace {

Event map_ev(std::uint32_t id, std::string cls = "XTerm", std::string title = "t")
{
    return event::MapRequest{WindowId{id}, std::move(cls), std::move(title)};
}

Event key(std::string_view chord)
{
    return event::KeyPress{parse_chord(chord)};
}

WmState fresh(Config const& cfg = {})
{
    return WmState::make(cfg.workspaces, {0, 0, 1920, 1080}, cfg.params);
}

/// Runs events through reduce, returning the final transition.
Transition run(WmState s, std::vector<Event> const& events, Config const& cfg)
{
    Transition t{std::move(s), {}};
    for (auto const& e : events)
        t = reduce(std::move(t.state), e, cfg);
    return t;
}

std::vector<DisplayCommand> without_status(std::vector<DisplayCommand> const& cmds)
{
    std::vector<DisplayCommand> out;
    for (auto const& c : cmds) {
        if (!std::holds_alternative<cmd::EmitStatus>(c))
            out.push_back(c);
    }
    return out;
}

} // namespace

TEST_CASE("first window is tiled full screen, mapped and focused")
{
    Config const cfg;
    auto const t = reduce(fresh(), map_ev(1), cfg);
    std::vector<DisplayCommand> const expected{
        cmd::Configure{WindowId{1}, {0, 0, 1920, 1080}},
        cmd::Map{WindowId{1}},
        cmd::SetBorder{WindowId{1}, true},
        cmd::SetInputFocus{WindowId{1}},
        cmd::EmitStatus{"1*:1 2:0 3:0 4:0 5:0 6:0 7:0 8:0 9:0|ms|0.55|t"},
    };
    CHECK(t.commands == expected);
}

TEST_CASE("a class rule sends the window to another workspace without mapping it")
{
    Config cfg;
    cfg.rules.push_back({"Google-chrome", std::nullopt, 2, StartState::None, false});
    auto const t = reduce(fresh(cfg), map_ev(7, "Google-chrome"), cfg);
    CHECK(t.state.at(2).contains(WindowId{7}));
    CHECK(t.state.at(1).nodes.empty());
    for (auto const& c : t.commands)
        CHECK_FALSE(std::holds_alternative<cmd::Map>(c));
    REQUIRE(t.commands.size() == 1);
    CHECK(std::get<cmd::EmitStatus>(t.commands[0]).text.starts_with("1*:0 2:1 "));
}

TEST_CASE("viewing another workspace unmaps the current windows")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), map_ev(2), key("alt+2")}, cfg);
    auto const body = without_status(t.commands);
    CHECK(body == std::vector<DisplayCommand>{cmd::Unmap{WindowId{2}}, cmd::Unmap{WindowId{1}}});
    CHECK(std::holds_alternative<cmd::EmitStatus>(t.commands.back()));
    CHECK(t.state.active == 2);
}

TEST_CASE("grow_master reconfigures both tiled windows")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), map_ev(2), key("alt+l")}, cfg);
    CHECK(t.state.current().params.master_ratio == doctest::Approx(0.60).epsilon(1e-12));
    std::vector<DisplayCommand> const expected{
        cmd::Configure{WindowId{2}, {0, 0, 1152, 1080}},
        cmd::Configure{WindowId{1}, {1152, 0, 768, 1080}},
    };
    CHECK(without_status(t.commands) == expected);
}

TEST_CASE("close asks the focused client to go")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), map_ev(2), key("alt+shift+q")}, cfg);
    REQUIRE(t.commands.size() == 2);
    CHECK(t.commands[0] == DisplayCommand{cmd::CloseGracefully{WindowId{2}}});
    CHECK(std::holds_alternative<cmd::EmitStatus>(t.commands[1]));
    // the window stays managed until it is destroyed
    CHECK(t.state.current().nodes.size() == 2);
}

TEST_CASE("stray input is ignored")
{
    Config const cfg;
    auto const s = run(fresh(), {map_ev(1)}, cfg).state;
    auto const d = reduce(s, event::DestroyNotify{WindowId{99}}, cfg);
    CHECK(d.commands.empty());
    CHECK(d.state == s);
    auto const k = reduce(s, key("ctrl+l"), cfg);
    CHECK(k.commands.empty());
    CHECK(k.state == s);
    auto const again = reduce(s, map_ev(1), cfg);
    CHECK(again.commands.empty());
    auto const zero = reduce(s, map_ev(0), cfg);
    CHECK(zero.commands.empty());
    CHECK(zero.state == s);
}

TEST_CASE("destroying the focused window retiles and moves focus")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), map_ev(2), event::DestroyNotify{WindowId{2}}}, cfg);
    std::vector<DisplayCommand> const expected{
        cmd::Configure{WindowId{1}, {0, 0, 1920, 1080}},
        cmd::SetBorder{WindowId{1}, true},
        cmd::SetInputFocus{WindowId{1}},
    };
    CHECK(without_status(t.commands) == expected);
}

TEST_CASE("quit only exits")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), key("alt+shift+e")}, cfg);
    CHECK(t.commands == std::vector<DisplayCommand>{cmd::ExitLoop{}});
}

TEST_CASE("move_to unmaps the window and hands focus on")
{
    Config const cfg;
    auto const t = run(fresh(), {map_ev(1), map_ev(2), key("alt+shift+3")}, cfg);
    CHECK(t.state.at(3).contains(WindowId{2}));
    std::vector<DisplayCommand> const expected{
        cmd::Unmap{WindowId{2}},
        cmd::Configure{WindowId{1}, {0, 0, 1920, 1080}},
        cmd::SetBorder{WindowId{2}, false},
        cmd::SetBorder{WindowId{1}, true},
        cmd::SetInputFocus{WindowId{1}},
    };
    CHECK(without_status(t.commands) == expected);
}

TEST_CASE("floating windows keep the geometry they ask for")
{
    Config cfg;
    cfg.rules.push_back({"Float", std::nullopt, std::nullopt, StartState::Floating, false});
    auto t = run(fresh(cfg), {map_ev(1), map_ev(2, "Float")}, cfg);
    // the floating window is left out of the layout
    CHECK(without_status(t.commands).front() == DisplayCommand{cmd::Configure{WindowId{1}, {0, 0, 1920, 1080}}});
    t = reduce(t.state, event::ConfigureRequest{WindowId{2}, {10, 20, 300, 200}}, cfg);
    CHECK(t.commands == std::vector<DisplayCommand>{cmd::Configure{WindowId{2}, {10, 20, 300, 200}}});

    // a tiled window asking for a size is told its slot
    t = reduce(t.state, event::ConfigureRequest{WindowId{1}, {5, 5, 50, 50}}, cfg);
    CHECK(t.commands == std::vector<DisplayCommand>{cmd::Configure{WindowId{1}, {0, 0, 1920, 1080}}});
}

TEST_CASE("fullscreen toggling")
{
    Config const cfg;
    auto t = run(fresh(), {map_ev(1), map_ev(2), map_ev(3), key("alt+m")}, cfg);
    auto const body = without_status(t.commands);
    REQUIRE(body.size() == 3);
    CHECK(body[0] == DisplayCommand{cmd::Configure{WindowId{3}, {0, 0, 1920, 1080}}});
    CHECK(body[1] == DisplayCommand{cmd::Configure{WindowId{2}, {0, 0, 1056, 1080}}});
    CHECK(body[2] == DisplayCommand{cmd::Configure{WindowId{1}, {1056, 0, 864, 1080}}});
    t = reduce(t.state, key("alt+m"), cfg);
    CHECK_FALSE(t.state.find(WindowId{3})->fullscreen);
}

TEST_CASE("monocle layout through a binding")
{
    auto const cfg = fuzz::config();
    auto const t = run(fresh(cfg), {map_ev(1), map_ev(2), key("alt+space")}, cfg);
    CHECK(t.state.current().layout == LayoutKind::Monocle);
    for (auto const& c : without_status(t.commands))
        CHECK(std::get<cmd::Configure>(c).geometry == Rect{0, 0, 1920, 1080});
    CHECK(std::get<cmd::EmitStatus>(t.commands.back()).text.find("|mono|") != std::string::npos);
}

TEST_CASE("status can be turned off")
{
    Config cfg;
    cfg.status_enabled = false;
    auto const t = reduce(fresh(cfg), map_ev(1), cfg);
    for (auto const& c : t.commands)
        CHECK_FALSE(std::holds_alternative<cmd::EmitStatus>(c));
}

TEST_CASE("retile covers the screen exactly")
{
    Config const cfg;
    auto s = fresh();
    for (std::uint32_t i = 1; i <= 12; ++i) {
        s = reduce(s, map_ev(i), cfg).state;
        std::vector<Rect> rects;
        for (auto const& c : retile(s))
            rects.push_back(std::get<cmd::Configure>(c).geometry);
        CHECK(rects.size() == i);
        CHECK(oracle::pixel_coverage(s.screen, rects).exact());
    }
}

TEST_CASE("reduce is deterministic and retile is idempotent")
{
    auto const cfg = fuzz::config();
    auto const script = fuzz::script(5, 2000, cfg);
    Transition a{fresh(cfg), {}};
    Transition b{fresh(cfg), {}};
    for (auto const& e : script.entries) {
        a = reduce(std::move(a.state), e.event, cfg);
        b = reduce(std::move(b.state), e.event, cfg);
        REQUIRE(a.state == b.state);
        REQUIRE(a.commands == b.commands);
        REQUIRE(retile(a.state) == retile(a.state));
    }
}

TEST_CASE("commands never name windows the state does not know")
{
    auto const cfg = fuzz::config();
    for (unsigned seed = 1; seed <= 5; ++seed) {
        auto const script = fuzz::script(seed, 2000, cfg);
        auto s = fresh(cfg);
        for (auto const& e : script.entries) {
            auto t = reduce(std::move(s), e.event, cfg);
            for (auto const& c : t.commands) {
                auto const target = command_target(c);
                if (target && !std::holds_alternative<cmd::Unmap>(c))
                    REQUIRE(t.state.find(*target) != nullptr);
                if (auto const* st = std::get_if<cmd::EmitStatus>(&c))
                    REQUIRE(oracle::parse_status(st->text));
            }
            REQUIRE(invariants_hold(t.state));
            s = std::move(t.state);
        }
    }
}

TEST_CASE("event formatting matches the script grammar")
{
    CHECK(format_event(map_ev(3, "XTerm", "x")) == "map 3 class=XTerm title=x");
    CHECK(format_event(key("alt+shift+1")) == "key alt+shift+1");
    CHECK(format_event(event::ConfigureRequest{WindowId{2}, {1, 2, 3, 4}}) == "configure 2 1 2 3 4");
    CHECK(format_command(cmd::SetBorder{WindowId{4}, false}) == "border 4 off");
}
