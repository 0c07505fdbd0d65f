#include "tilewm/backend.hpp"

#include "tilewm/status.hpp"

namespace tilewm {

LoopResult run_event_loop(Backend& backend, WmState initial, Config const& config)
{
    LoopResult result{0, std::move(initial)};
    if (config.status_enabled)
        backend.execute(cmd::EmitStatus{render_status(result.state)});

    while (auto event = backend.next_event()) {
        auto transition = reduce(std::move(result.state), *event, config);
        result.state = std::move(transition.state);
        for (auto const& command : transition.commands) {
            backend.execute(command);
            if (std::holds_alternative<cmd::ExitLoop>(command))
                return result;
        }
    }
    return result;
}

} // namespace tilewm
