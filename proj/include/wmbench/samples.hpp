#pragma once

#include "wmbench/stats.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wmbench {

struct Sample {
    double time = 0.0; // seconds
    std::string group;

    bool operator==(Sample const&) const = default;
};

/// CSV with the header row `time,type`, one observation per row. Throws
/// BadHeader, or BadRow with the 1-based file line.
std::vector<Sample> load_samples(std::string_view csv);

/// Buckets samples by label, labels in first-appearance order and samples
/// in file order within each label.
Groups group_samples(std::vector<Sample> const& samples);

} // namespace wmbench
