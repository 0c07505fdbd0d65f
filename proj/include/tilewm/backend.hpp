#pragma once

#include "tilewm/config.hpp"
#include "tilewm/reducer.hpp"
#include "tilewm/workspace.hpp"

#include <optional>

namespace tilewm {

/// What the event loop needs from a display server.
class Backend {
public:
    virtual ~Backend() = default;

    /// Take window-management rights and grab the bound chords.
    /// Throws AlreadyManaged when another manager holds them.
    virtual void acquire(Config const& config) = 0;

    /// Blocks for the next event; nullopt once the source is exhausted.
    virtual std::optional<Event> next_event() = 0;

    virtual void execute(DisplayCommand const& command) = 0;

    virtual Rect screen() const = 0;
};

struct LoopResult {
    int exit_status = 0;
    WmState state;
};

/// Emits the initial status, then feeds events through reduce() and the
/// resulting commands to the backend in order until ExitLoop or the end
/// of input.
LoopResult run_event_loop(Backend& backend, WmState initial, Config const& config);

} // namespace tilewm
