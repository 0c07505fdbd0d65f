#include "wmbench/samples.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>

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

[[noreturn]] void bad_row(int line, std::string const& why)
{
    throw StatsError(StatsErrorCode::BadRow, "line " + std::to_string(line) + ": " + why, line);
}

} // namespace

std::vector<Sample> load_samples(std::string_view csv)
{
    std::vector<Sample> samples;
    bool header_seen = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        auto const nl = csv.find('\n', pos);
        auto const line = trim(csv.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? csv.size() : nl + 1;
        ++line_no;

        if (!header_seen) {
            auto const comma = line.find(',');
            if (comma == std::string_view::npos || trim(line.substr(0, comma)) != "time"
                || trim(line.substr(comma + 1)) != "type")
                throw StatsError(StatsErrorCode::BadHeader, "expected header 'time,type'");
            header_seen = true;
            continue;
        }
        if (line.empty())
            continue;

        auto const comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            bad_row(line_no, "expected two fields");
        auto const time_text = trim(line.substr(0, comma));
        auto const label = trim(line.substr(comma + 1));

        double time = 0.0;
        auto const* end = time_text.data() + time_text.size();
        auto const [ptr, ec] = std::from_chars(time_text.data(), end, time);
        if (ec != std::errc{} || ptr != end || time_text.empty())
            bad_row(line_no, "time is not a number");
        if (!(time > 0.0) || !std::isfinite(time))
            bad_row(line_no, "time must be positive");
        if (label.empty())
            bad_row(line_no, "empty group label");
        samples.push_back({time, std::string(label)});
    }
    if (!header_seen)
        throw StatsError(StatsErrorCode::BadHeader, "expected header 'time,type'");
    return samples;
}

Groups group_samples(std::vector<Sample> const& samples)
{
    Groups groups;
    for (auto const& s : samples) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](auto const& g) { return g.first == s.group; });
        if (it == groups.end()) {
            groups.emplace_back(s.group, std::vector<double>{});
            it = std::prev(groups.end());
        }
        it->second.push_back(s.time);
    }
    return groups;
}

} // namespace wmbench
