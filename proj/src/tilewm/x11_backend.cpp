#include "tilewm/x11_backend.hpp"

#include "tilewm/error.hpp"

#include <X11/XKBlib.h>
#include <X11/Xatom.h>
#include <X11/Xlib.h>
#include <X11/Xutil.h>

// Xlib's event-type macros collide with the reducer's event names
namespace xproto {
constexpr int kMapRequest = MapRequest;
constexpr int kDestroyNotify = DestroyNotify;
constexpr int kKeyPress = KeyPress;
constexpr int kConfigureRequest = ConfigureRequest;
constexpr unsigned long kNone = None;
} // namespace xproto
#undef MapRequest
#undef DestroyNotify
#undef KeyPress
#undef ConfigureRequest
#undef None

#include <algorithm>
#include <array>
#include <cctype>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <unistd.h>

namespace tilewm {

namespace {

bool g_redirect_refused = false;

int on_startup_error(Display*, XErrorEvent* ev)
{
    if (ev->error_code == BadAccess)
        g_redirect_refused = true;
    return 0;
}

int on_runtime_error(Display*, XErrorEvent* ev)
{
    // windows vanish between the event and our request; that is not fatal
    if (ev->error_code == BadWindow || ev->error_code == BadMatch || ev->error_code == BadDrawable)
        return 0;
    std::fprintf(stderr, "tilewm: X error %d (request %d)\n", ev->error_code, ev->request_code);
    return 0;
}

int on_io_error(Display*)
{
    std::fprintf(stderr, "tilewm: connection to the display was lost\n");
    std::_Exit(3);
}

constexpr unsigned long kBorderFocused = 0x005577;
constexpr unsigned long kBorderNormal = 0x444444;
constexpr int kBorderWidth = 1;

KeySym keysym_for(std::string const& name)
{
    if (auto sym = XStringToKeysym(name.c_str()); sym != NoSymbol)
        return sym;
    static constexpr std::array<std::pair<char const*, char const*>, 6> kAliases{{
        {"backspace", "BackSpace"},
        {"pageup", "Prior"},
        {"pagedown", "Next"},
        {"capslock", "Caps_Lock"},
        {"printscreen", "Print"},
        {"enter", "Return"},
    }};
    for (auto const& [alias, real] : kAliases) {
        if (name == alias)
            return XStringToKeysym(real);
    }
    std::string capital = name;
    capital[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(capital[0])));
    return XStringToKeysym(capital.c_str());
}

unsigned x_modifiers(Modifier mods)
{
    unsigned out = 0;
    if (has(mods, Modifier::Alt))
        out |= Mod1Mask;
    if (has(mods, Modifier::Ctrl))
        out |= ControlMask;
    if (has(mods, Modifier::Shift))
        out |= ShiftMask;
    if (has(mods, Modifier::Super))
        out |= Mod4Mask;
    return out;
}

Modifier chord_modifiers(unsigned state)
{
    Modifier out = Modifier::None;
    if (state & Mod1Mask)
        out = out | Modifier::Alt;
    if (state & ControlMask)
        out = out | Modifier::Ctrl;
    if (state & ShiftMask)
        out = out | Modifier::Shift;
    if (state & Mod4Mask)
        out = out | Modifier::Super;
    return out;
}

} // namespace

struct X11Backend::Impl {
    Display* dpy = nullptr;
    Window root = 0;
    int screen = 0;
    Atom wm_protocols = 0;
    Atom wm_delete = 0;
    Atom net_wm_name = 0;
    unsigned numlock_mask = 0;
    std::set<Window> managed;

    Window win(WindowId id) const { return static_cast<Window>(raw(id)); }

    void update_numlock_mask()
    {
        numlock_mask = 0;
        XModifierKeymap* map = XGetModifierMapping(dpy);
        KeyCode const numlock = XKeysymToKeycode(dpy, XK_Num_Lock);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < map->max_keypermod; ++j) {
                if (map->modifiermap[i * map->max_keypermod + j] == numlock)
                    numlock_mask = 1u << i;
            }
        }
        XFreeModifiermap(map);
    }

    void grab_keys(Bindings const& bindings)
    {
        update_numlock_mask();
        XUngrabKey(dpy, AnyKey, AnyModifier, root);
        std::array<unsigned, 4> const extras{0, LockMask, numlock_mask, numlock_mask | LockMask};
        for (auto const& [chord, action] : bindings) {
            KeyCode const code = XKeysymToKeycode(dpy, keysym_for(chord.key));
            if (code == 0) {
                std::fprintf(stderr, "tilewm: no key for '%s', binding skipped\n", format_chord(chord).c_str());
                continue;
            }
            for (unsigned extra : extras)
                XGrabKey(dpy, code, x_modifiers(chord.modifiers) | extra, root, True, GrabModeAsync, GrabModeAsync);
        }
    }

    std::string window_class(Window w) const
    {
        XClassHint hint{};
        std::string cls;
        if (XGetClassHint(dpy, w, &hint)) {
            if (hint.res_class)
                cls = hint.res_class;
            XFree(hint.res_name);
            XFree(hint.res_class);
        }
        return cls;
    }

    std::string window_title(Window w) const
    {
        XTextProperty prop{};
        if (!XGetTextProperty(dpy, w, &prop, net_wm_name) || prop.nitems == 0) {
            if (!XGetTextProperty(dpy, w, &prop, XA_WM_NAME) || prop.nitems == 0)
                return {};
        }
        std::string title(reinterpret_cast<char const*>(prop.value), prop.nitems);
        XFree(prop.value);
        return title;
    }

    bool supports_delete(Window w) const
    {
        Atom* protocols = nullptr;
        int count = 0;
        bool found = false;
        if (XGetWMProtocols(dpy, w, &protocols, &count)) {
            found = std::find(protocols, protocols + count, wm_delete) != protocols + count;
            XFree(protocols);
        }
        return found;
    }

    void send_delete(Window w)
    {
        XEvent ev{};
        ev.xclient.type = ClientMessage;
        ev.xclient.window = w;
        ev.xclient.message_type = wm_protocols;
        ev.xclient.format = 32;
        ev.xclient.data.l[0] = static_cast<long>(wm_delete);
        ev.xclient.data.l[1] = CurrentTime;
        XSendEvent(dpy, w, False, NoEventMask, &ev);
    }

    void send_configure_notify(Window w, Rect const& g, int inner_w, int inner_h)
    {
        XConfigureEvent ce{};
        ce.type = ConfigureNotify;
        ce.display = dpy;
        ce.event = w;
        ce.window = w;
        ce.x = g.x;
        ce.y = g.y;
        ce.width = inner_w;
        ce.height = inner_h;
        ce.border_width = kBorderWidth;
        ce.above = xproto::kNone;
        ce.override_redirect = False;
        XSendEvent(dpy, w, False, StructureNotifyMask, reinterpret_cast<XEvent*>(&ce));
    }

    void spawn(std::string const& command)
    {
        if (fork() == 0) {
            if (dpy)
                close(ConnectionNumber(dpy));
            setsid();
            execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
            std::_Exit(127);
        }
    }
};

X11Backend::X11Backend(std::string const& display_name)
    : impl_(std::make_unique<Impl>())
{
    impl_->dpy = XOpenDisplay(display_name.empty() ? nullptr : display_name.c_str());
    if (!impl_->dpy)
        throw Error(ErrorCode::ConnectionLost, "cannot open display '" + display_name + "'");
    impl_->screen = DefaultScreen(impl_->dpy);
    impl_->root = RootWindow(impl_->dpy, impl_->screen);
    impl_->wm_protocols = XInternAtom(impl_->dpy, "WM_PROTOCOLS", False);
    impl_->wm_delete = XInternAtom(impl_->dpy, "WM_DELETE_WINDOW", False);
    impl_->net_wm_name = XInternAtom(impl_->dpy, "_NET_WM_NAME", False);
}

X11Backend::~X11Backend()
{
    if (impl_->dpy)
        XCloseDisplay(impl_->dpy);
}

void X11Backend::acquire(Config const& config)
{
    auto& x = *impl_;
    g_redirect_refused = false;
    XSetErrorHandler(on_startup_error);
    XSelectInput(x.dpy, x.root, SubstructureRedirectMask | SubstructureNotifyMask | KeyPressMask);
    XSync(x.dpy, False);
    if (g_redirect_refused)
        throw Error(ErrorCode::AlreadyManaged, "another window manager is already running");
    XSetErrorHandler(on_runtime_error);
    XSetIOErrorHandler(on_io_error);
    std::signal(SIGCHLD, SIG_IGN);

    x.grab_keys(config.bindings);
    XSync(x.dpy, False);
}

std::optional<Event> X11Backend::next_event()
{
    auto& x = *impl_;
    XEvent ev;
    while (true) {
        XNextEvent(x.dpy, &ev);
        switch (ev.type) {
        case xproto::kMapRequest: {
            Window const w = ev.xmaprequest.window;
            XWindowAttributes attrs;
            if (!XGetWindowAttributes(x.dpy, w, &attrs))
                continue;
            if (attrs.override_redirect) {
                XMapWindow(x.dpy, w);
                continue;
            }
            if (x.managed.contains(w))
                continue;
            x.managed.insert(w);
            XSelectInput(x.dpy, w, StructureNotifyMask | PropertyChangeMask);
            XSetWindowBorderWidth(x.dpy, w, kBorderWidth);
            return event::MapRequest{WindowId{static_cast<std::uint32_t>(w)}, x.window_class(w), x.window_title(w)};
        }
        case xproto::kDestroyNotify:
            if (x.managed.erase(ev.xdestroywindow.window))
                return event::DestroyNotify{WindowId{static_cast<std::uint32_t>(ev.xdestroywindow.window)}};
            continue;
        case xproto::kKeyPress: {
            KeySym const sym = XkbKeycodeToKeysym(x.dpy, static_cast<KeyCode>(ev.xkey.keycode), 0, 0);
            char const* name = XKeysymToString(sym);
            if (!name)
                continue;
            std::string key(name);
            std::transform(key.begin(), key.end(), key.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            unsigned const state = ev.xkey.state & ~(LockMask | x.numlock_mask);
            return event::KeyPress{KeyChord{chord_modifiers(state), key}};
        }
        case xproto::kConfigureRequest: {
            auto const& req = ev.xconfigurerequest;
            if (x.managed.contains(req.window)) {
                return event::ConfigureRequest{WindowId{static_cast<std::uint32_t>(req.window)},
                                               Rect{req.x, req.y, std::max(1, req.width), std::max(1, req.height)}};
            }
            XWindowChanges changes{};
            changes.x = req.x;
            changes.y = req.y;
            changes.width = req.width;
            changes.height = req.height;
            changes.border_width = req.border_width;
            changes.sibling = req.above;
            changes.stack_mode = req.detail;
            XConfigureWindow(x.dpy, req.window, static_cast<unsigned>(req.value_mask), &changes);
            continue;
        }
        case MappingNotify:
            XRefreshKeyboardMapping(&ev.xmapping);
            continue;
        default:
            continue;
        }
    }
}

void X11Backend::execute(DisplayCommand const& command)
{
    auto& x = *impl_;
    std::visit(
        [&](auto const& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, cmd::Map>) {
                XMapWindow(x.dpy, x.win(c.id));
            } else if constexpr (std::is_same_v<T, cmd::Unmap>) {
                XUnmapWindow(x.dpy, x.win(c.id));
            } else if constexpr (std::is_same_v<T, cmd::Configure>) {
                int const w = std::max(1, c.geometry.w - 2 * kBorderWidth);
                int const h = std::max(1, c.geometry.h - 2 * kBorderWidth);
                XMoveResizeWindow(x.dpy, x.win(c.id), c.geometry.x, c.geometry.y, static_cast<unsigned>(w),
                                  static_cast<unsigned>(h));
                x.send_configure_notify(x.win(c.id), c.geometry, w, h);
            } else if constexpr (std::is_same_v<T, cmd::SetInputFocus>) {
                XSetInputFocus(x.dpy, x.win(c.id), RevertToPointerRoot, CurrentTime);
            } else if constexpr (std::is_same_v<T, cmd::SetBorder>) {
                XSetWindowBorder(x.dpy, x.win(c.id), c.focused ? kBorderFocused : kBorderNormal);
            } else if constexpr (std::is_same_v<T, cmd::CloseGracefully>) {
                if (x.supports_delete(x.win(c.id)))
                    x.send_delete(x.win(c.id));
                else
                    execute(cmd::KillClient{c.id});
            } else if constexpr (std::is_same_v<T, cmd::KillClient>) {
                XKillClient(x.dpy, x.win(c.id));
            } else if constexpr (std::is_same_v<T, cmd::Spawn>) {
                x.spawn(c.command);
            } else if constexpr (std::is_same_v<T, cmd::EmitStatus>) {
                std::fputs(c.text.c_str(), stdout);
                std::fputc('\n', stdout);
                std::fflush(stdout);
            } else if constexpr (std::is_same_v<T, cmd::ExitLoop>) {
                XUngrabKey(x.dpy, AnyKey, AnyModifier, x.root);
            }
        },
        command);
    XFlush(x.dpy);
}

Rect X11Backend::screen() const
{
    return {0, 0, DisplayWidth(impl_->dpy, impl_->screen), DisplayHeight(impl_->dpy, impl_->screen)};
}

} // namespace tilewm
