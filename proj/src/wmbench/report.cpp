#include "wmbench/report.hpp"

#include <cstdarg>
#include <cstdio>

namespace wmbench {

namespace {

[[gnu::format(printf, 2, 3)]] void appendf(std::string& out, char const* fmt, ...)
{
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

} // namespace

std::string stats_report(Groups const& groups)
{
    std::string out;
    appendf(out, "%-12s %4s %10s\n", "group", "n", "mean (s)");
    for (auto const& [label, xs] : groups)
        appendf(out, "%-12s %4zu %10.2f\n", label.c_str(), xs.size(), xs.empty() ? 0.0 : mean(xs));

    if (groups.size() == 2) {
        auto const s = summarize(groups);
        appendf(out, "diff = %.2f s\n", s.diff);
        appendf(out, "saving = %.2f%% (%s vs %s)\n", s.saving_percent, s.treatment.c_str(), s.baseline.c_str());
    }

    try {
        auto const pairs = pooled_pairwise_t(groups);
        out += "pairwise t tests with pooled SD:\n";
        for (auto const& e : pairs) {
            appendf(out, "  %s vs %s: t = %.4f, df = %g, p = %.6g\n", e.first.c_str(), e.second.c_str(), e.result.t,
                    e.result.df, e.result.p_two_sided);
        }
        for (auto const& e : pairs) {
            bool const reject = e.result.p_two_sided < kSignificanceLevel;
            appendf(out, "decision (%s vs %s): %s at %.2f\n", e.first.c_str(), e.second.c_str(),
                    reject ? "reject null" : "retain null", kSignificanceLevel);
        }
    } catch (StatsError const& e) {
        appendf(out, "pairwise t tests with pooled SD: n/a (%s)\n", e.what());
    }

    try {
        auto const a = anova_oneway(groups);
        out += "one-way ANOVA:\n";
        appendf(out, "  %-8s %4s %12s %12s %10s %12s\n", "source", "df", "SS", "MS", "F", "p");
        appendf(out, "  %-8s %4g %12.4f %12.4f %10.4f %12.6g\n", "between", a.df_between, a.ss_between,
                a.ss_between / a.df_between, a.f, a.p);
        appendf(out, "  %-8s %4g %12.4f %12.4f\n", "within", a.df_within, a.ss_within, a.ss_within / a.df_within);
    } catch (StatsError const& e) {
        appendf(out, "one-way ANOVA: n/a (%s)\n", e.what());
    }

    if (groups.size() == 2 && groups[0].second.size() == groups[1].second.size()) {
        try {
            auto const r = paired_t_test(groups[0].second, groups[1].second);
            appendf(out, "paired t-test (%s - %s): t = %.4f, df = %g, p = %.6g\n", groups[0].first.c_str(),
                    groups[1].first.c_str(), r.t, r.df, r.p_two_sided);
        } catch (StatsError const& e) {
            appendf(out, "paired t-test: n/a (%s)\n", e.what());
        }
    }
    return out;
}

std::string model_report(std::vector<WorkflowStep> const& steps, Mode mode, CostParams const& params)
{
    std::string out;
    appendf(out, "mode: %s\n", std::string(mode_name(mode)).c_str());
    for (auto const& step : steps) {
        auto const r = model_workflow({step}, mode, params);
        appendf(out, "  %d. %-42s %7.3f s\n", step.number, step.name.c_str(), r.total);
    }
    auto const total = model_workflow(steps, mode, params);
    appendf(out, "total = %.3f s\n", total.total);
    appendf(out, "pointer_ops = %d\n", total.pointer_ops);
    appendf(out, "keystrokes = %d\n", total.keystrokes);
    appendf(out, "homing = %d\n", total.homing);
    return out;
}

} // namespace wmbench
