#include "wmbench/cost_model.hpp"

#include "protocol_steps.hpp"
#include "wmbench/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

namespace wmbench {

namespace {

std::string_view trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto const at = text.find(sep, start);
        out.push_back(trim(text.substr(start, at == std::string_view::npos ? at : at - start)));
        if (at == std::string_view::npos)
            return out;
        start = at + 1;
    }
}

[[noreturn]] void bad_row(int line, std::string const& why)
{
    throw StatsError(StatsErrorCode::BadRow, "line " + std::to_string(line) + ": " + why, line);
}

template <typename T>
T number(std::string_view text, int line)
{
    T value{};
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        bad_row(line, "'" + std::string(text) + "' is not a number");
    return value;
}

/// Calls `fn(line_no, line)` for each non-blank, comment-stripped line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto const nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            fn(line_no, line);
    }
}

} // namespace

double fitts_mt(double distance, double width, CostParams const& params)
{
    if (!(width > 0.0))
        throw StatsError(StatsErrorCode::NonpositiveWidth, "target width must be positive");
    if (distance < 0.0)
        throw StatsError(StatsErrorCode::NonpositiveWidth, "distance must be non-negative");
    return params.fitts_a + params.fitts_b * std::log2(distance / width + 1.0);
}

std::string_view mode_name(Mode mode)
{
    return mode == Mode::Floating ? "floating" : "dynamic";
}

std::vector<std::string> const& protocol_step_names()
{
    static std::vector<std::string> const names{
        "launch browser",
        "open file manager",
        "open text editor",
        "arrange browser and editor side by side",
        "browse and copy a line into the editor",
        "quit browser and editor",
        "open two PDFs side by side",
        "close the PDF viewers",
        "terminal: ls, then quit",
    };
    return names;
}

std::vector<WorkflowStep> parse_step_table(std::string_view text)
{
    std::map<int, WorkflowStep> steps;
    std::map<int, int> first_line;
    for_each_line(text, [&](int line_no, std::string_view line) {
        auto const f = split(line, ',');
        if (f.size() != 6 || f[0] != "step")
            bad_row(line_no, "expected step,<n>,<mode>,<kind>,<D>,<W>");
        int const n = number<int>(f[1], line_no);
        if (n < 1)
            bad_row(line_no, "step numbers start at 1");

        Primitive prim;
        if (f[3] == "point")
            prim.kind = PrimitiveKind::Point;
        else if (f[3] == "click")
            prim.kind = PrimitiveKind::Click;
        else if (f[3] == "key")
            prim.kind = PrimitiveKind::Key;
        else if (f[3] == "home")
            prim.kind = PrimitiveKind::Home;
        else
            bad_row(line_no, "unknown primitive '" + std::string(f[3]) + "'");
        prim.distance = number<double>(f[4], line_no);
        prim.width = number<double>(f[5], line_no);
        if (prim.kind == PrimitiveKind::Point && !(prim.width > 0.0 && prim.distance >= 0.0))
            bad_row(line_no, "point needs D >= 0 and W > 0");

        auto& step = steps[n];
        step.number = n;
        first_line.try_emplace(n, line_no);
        if (f[2] == "floating")
            step.floating.push_back(prim);
        else if (f[2] == "dynamic")
            step.dynamic.push_back(prim);
        else
            bad_row(line_no, "mode must be floating or dynamic");
    });

    std::vector<WorkflowStep> out;
    auto const& names = protocol_step_names();
    for (auto& [n, step] : steps) {
        if (step.floating.empty() || step.dynamic.empty())
            bad_row(first_line[n], "step " + std::to_string(n) + " is missing a mode");
        step.name = n <= static_cast<int>(names.size()) ? names[n - 1] : "step " + std::to_string(n);
        out.push_back(std::move(step));
    }
    return out;
}

std::string_view default_step_table()
{
    return kProtocolStepTable;
}

std::vector<WorkflowStep> default_workflow()
{
    return parse_step_table(default_step_table());
}

ModelResult& ModelResult::operator+=(ModelResult const& other)
{
    total += other.total;
    pointer_ops += other.pointer_ops;
    keystrokes += other.keystrokes;
    homing += other.homing;
    return *this;
}

ModelResult model_workflow(std::vector<WorkflowStep> const& steps, Mode mode, CostParams const& params)
{
    ModelResult r;
    for (auto const& step : steps) {
        for (auto const& p : step.primitives(mode)) {
            switch (p.kind) {
            case PrimitiveKind::Point:
                r.total += fitts_mt(p.distance, p.width, params);
                ++r.pointer_ops;
                break;
            case PrimitiveKind::Click:
                r.total += kClickSeconds;
                ++r.pointer_ops;
                break;
            case PrimitiveKind::Key:
                r.total += params.keystroke;
                ++r.keystrokes;
                break;
            case PrimitiveKind::Home:
                r.total += params.homing;
                ++r.homing;
                break;
            }
        }
    }
    return r;
}

CostParams parse_cost_params(std::string_view text)
{
    CostParams params;
    for_each_line(text, [&](int line_no, std::string_view line) {
        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            bad_row(line_no, "expected key = value");
        auto const key = trim(line.substr(0, eq));
        double const value = number<double>(trim(line.substr(eq + 1)), line_no);
        if (!(value >= 0.0) || !std::isfinite(value))
            bad_row(line_no, "parameters must be non-negative");
        if (key == "fitts_a")
            params.fitts_a = value;
        else if (key == "fitts_b")
            params.fitts_b = value;
        else if (key == "keystroke")
            params.keystroke = value;
        else if (key == "homing")
            params.homing = value;
        else
            bad_row(line_no, "unknown parameter '" + std::string(key) + "'");
    });
    return params;
}

} // namespace wmbench
