#include "tilewm/status.hpp"

#include <cstdio>

namespace tilewm {

std::string sanitize_title(std::string_view title)
{
    std::string out;
    out.reserve(title.size());
    for (char c : title) {
        if (c != '\n' && c != '\r' && c != '|')
            out += c;
    }
    if (out.size() > kMaxStatusTitle) {
        std::size_t cut = kMaxStatusTitle;
        // back off continuation bytes so a code point is never split
        while (cut > 0 && (static_cast<unsigned char>(out[cut]) & 0xC0) == 0x80)
            --cut;
        out.resize(cut);
    }
    return out;
}

std::string render_status(WmState const& state)
{
    std::string line;
    for (auto const& ws : state.workspaces) {
        if (!line.empty())
            line += ' ';
        line += std::to_string(ws.index);
        if (ws.index == state.active)
            line += '*';
        line += ':';
        line += std::to_string(ws.nodes.size());
    }

    auto const& active = state.current();
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.2f", active.params.master_ratio);

    line += '|';
    line += layout_tag(active.layout);
    line += '|';
    line += ratio;
    line += '|';
    if (auto const* node = active.focused_node())
        line += sanitize_title(node->title);
    return line;
}

} // namespace tilewm
