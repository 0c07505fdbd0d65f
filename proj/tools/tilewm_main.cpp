#include "tilewm/config.hpp"
#include "tilewm/error.hpp"
#include "tilewm/headless.hpp"

#ifdef TILEWM_HAVE_X11
#include "tilewm/x11_backend.hpp"
#endif

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode {
    kOk = 0,
    kConfigError = 1,
    kAlreadyManaged = 2,
    kConnectionLost = 3,
    kBadScript = 4,
    kProtocolViolation = 5,
};

std::optional<std::string> read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

tilewm::Rect parse_screen(std::string const& spec)
{
    int w = 0;
    int h = 0;
    char x = 0;
    std::istringstream in(spec);
    if (!(in >> w >> x >> h) || x != 'x' || w <= 0 || h <= 0)
        throw CLI::ValidationError("--screen", "expected WIDTHxHEIGHT");
    return {0, 0, w, h};
}

int replay(std::string const& path, tilewm::Config const& config, tilewm::Rect screen)
{
    auto const text = read_file(path);
    if (!text) {
        std::cerr << "tilewm: cannot read script " << path << '\n';
        return kBadScript;
    }
    try {
        auto const script = tilewm::parse_script(*text, config.modifier);
        auto const result = tilewm::simulate(script, config, screen);
        std::cout << tilewm::format_log(result.log) << std::flush;
        for (auto const& v : result.violations)
            std::cerr << "tilewm: protocol violation: " << v << '\n';
        return result.violations.empty() ? kOk : kProtocolViolation;
    } catch (tilewm::Error const& e) {
        std::cerr << "tilewm: " << e.what() << '\n';
        return kBadScript;
    }
}

int run_x11(std::string const& display, tilewm::Config const& config)
{
#ifdef TILEWM_HAVE_X11
    try {
        tilewm::X11Backend backend(display);
        backend.acquire(config);
        auto state = tilewm::WmState::make(config.workspaces, backend.screen(), config.params);
        return tilewm::run_event_loop(backend, std::move(state), config).exit_status;
    } catch (tilewm::Error const& e) {
        std::cerr << "tilewm: " << e.what() << '\n';
        return e.code() == tilewm::ErrorCode::AlreadyManaged ? kAlreadyManaged : kConnectionLost;
    }
#else
    (void)display;
    (void)config;
    std::cerr << "tilewm: built without Xlib; only --replay and --check-config are available\n";
    return kConnectionLost;
#endif
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tilewm - keyboard-driven dynamic tiling window manager"};

    std::string config_path;
    std::string replay_path;
    std::string display;
    std::string screen_spec = "1920x1080";
    bool check_only = false;

    app.add_option("--config", config_path, "Configuration file (built-in defaults when omitted)");
    app.add_option("--replay", replay_path, "Run an event script headless and print the command log");
    app.add_flag("--check-config", check_only, "Parse the configuration and exit");
    app.add_option("--display", display, "X display to manage (default $DISPLAY)");
    app.add_option("--screen", screen_spec, "Screen size for --replay, WIDTHxHEIGHT")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    tilewm::Config config;
    if (!config_path.empty()) {
        auto const text = read_file(config_path);
        if (!text) {
            std::cerr << "tilewm: cannot read config " << config_path << '\n';
            return kConfigError;
        }
        try {
            config = tilewm::parse_config(*text);
        } catch (tilewm::Error const& e) {
            std::cerr << "tilewm: " << config_path << ": " << e.what() << '\n';
            return kConfigError;
        }
    }

    if (check_only) {
        std::cout << "config ok: " << config.workspaces << " workspaces, " << config.bindings.size()
                  << " bindings, " << config.rules.size() << " rules\n";
        return kOk;
    }

    if (!replay_path.empty()) {
        tilewm::Rect screen;
        try {
            screen = parse_screen(screen_spec);
        } catch (CLI::Error const& e) {
            return app.exit(e);
        }
        return replay(replay_path, config, screen);
    }

    return run_x11(display, config);
}
