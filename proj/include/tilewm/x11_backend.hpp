#pragma once

#include "tilewm/backend.hpp"

#include <memory>
#include <string>

namespace tilewm {

/// Non-reparenting Xlib backend. Takes substructure redirection on the
/// root window of the default screen and translates between X events and
/// the reducer's vocabulary.
class X11Backend final : public Backend {
public:
    /// Empty `display_name` means $DISPLAY. Throws ConnectionLost when the
    /// display cannot be opened.
    explicit X11Backend(std::string const& display_name = {});
    ~X11Backend() override;

    X11Backend(X11Backend const&) = delete;
    X11Backend& operator=(X11Backend const&) = delete;

    void acquire(Config const& config) override;
    std::optional<Event> next_event() override;
    void execute(DisplayCommand const& command) override;
    Rect screen() const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace tilewm
