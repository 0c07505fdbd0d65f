#pragma once

#include "wmbench/cost_model.hpp"
#include "wmbench/stats.hpp"

#include <string>
#include <vector>

namespace wmbench {

inline constexpr double kSignificanceLevel = 0.05;

/// Text printed by `wmbench stats`: group means, diff and saving (two
/// groups), pooled-SD pairwise tests with a decision per pair, the one-way
/// ANOVA table, and a paired t-test when exactly two equal-sized groups
/// are present (rows paired in file order).
std::string stats_report(Groups const& groups);

/// Text printed by `wmbench model` for one mode: per-step costs, then the
/// total and operation counts.
std::string model_report(std::vector<WorkflowStep> const& steps, Mode mode, CostParams const& params);

} // namespace wmbench
