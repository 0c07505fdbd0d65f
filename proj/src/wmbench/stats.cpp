#include "wmbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace wmbench {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

/// Continued fraction for I_x(a, b), modified Lentz. Converges quickly
/// for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double x, double a, double b)
{
    double const qab = a + b;
    double const qap = a + 1.0;
    double const qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        int const m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        double const delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon)
            break;
    }
    return h;
}

void require_groups(Groups const& groups)
{
    if (groups.size() < 2)
        throw StatsError(StatsErrorCode::TooFewGroups, "need at least two groups");
    for (auto const& [label, xs] : groups) {
        if (xs.size() < 2)
            throw StatsError(StatsErrorCode::TooFewGroups, "group '" + label + "' has fewer than two samples");
    }
}

double sum_squared_deviations(std::span<double const> xs)
{
    double const m = mean(xs);
    double ss = 0.0;
    for (double v : xs)
        ss += (v - m) * (v - m);
    return ss;
}

} // namespace

std::string_view to_string(StatsErrorCode code)
{
    switch (code) {
    case StatsErrorCode::NonpositiveWidth: return "NonpositiveWidth";
    case StatsErrorCode::LengthMismatch: return "LengthMismatch";
    case StatsErrorCode::ZeroVariance: return "ZeroVariance";
    case StatsErrorCode::TooFewGroups: return "TooFewGroups";
    case StatsErrorCode::InvalidDf: return "InvalidDf";
    case StatsErrorCode::BadHeader: return "BadHeader";
    case StatsErrorCode::BadRow: return "BadRow";
    }
    return "Unknown";
}

double incomplete_beta(double x, double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0) || std::isnan(x))
        return std::numeric_limits<double>::quiet_NaN();
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;

    double const log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    double const front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(x, a, b) / a;
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double tail_probability(Distribution kind, double statistic, double df1, double df2)
{
    auto const bad = [](double df) { return !(df > 0.0) || !std::isfinite(df); };
    if (bad(df1) || (kind == Distribution::FisherF && bad(df2)))
        throw StatsError(StatsErrorCode::InvalidDf, "degrees of freedom must be positive and finite");

    if (kind == Distribution::StudentT) {
        double const t2 = statistic * statistic;
        return incomplete_beta(df1 / (df1 + t2), df1 / 2.0, 0.5);
    }
    if (statistic <= 0.0)
        return 1.0;
    return incomplete_beta(df2 / (df2 + df1 * statistic), df2 / 2.0, df1 / 2.0);
}

double mean(std::span<double const> xs)
{
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double variance(std::span<double const> xs)
{
    return sum_squared_deviations(xs) / static_cast<double>(xs.size() - 1);
}

TTestResult paired_t_test(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size())
        throw StatsError(StatsErrorCode::LengthMismatch, "paired samples differ in length");
    if (x.size() < 2)
        throw StatsError(StatsErrorCode::LengthMismatch, "need at least two pairs");

    std::vector<double> d(x.size());
    std::transform(x.begin(), x.end(), y.begin(), d.begin(), std::minus<>{});
    if (std::all_of(d.begin(), d.end(), [&](double v) { return v == d.front(); }))
        throw StatsError(StatsErrorCode::ZeroVariance, "all paired differences are identical");

    double const n = static_cast<double>(d.size());
    double const sd = std::sqrt(variance(d));
    TTestResult r;
    r.t = mean(d) / (sd / std::sqrt(n));
    r.df = n - 1.0;
    r.p_two_sided = tail_probability(Distribution::StudentT, r.t, r.df);
    return r;
}

std::vector<PairwiseEntry> pooled_pairwise_t(Groups const& groups)
{
    require_groups(groups);
    double ss = 0.0;
    double total = 0.0;
    for (auto const& [label, xs] : groups) {
        ss += sum_squared_deviations(xs);
        total += static_cast<double>(xs.size());
    }
    double const df = total - static_cast<double>(groups.size());
    double const pooled_var = ss / df;
    if (!(pooled_var > 0.0))
        throw StatsError(StatsErrorCode::ZeroVariance, "pooled variance is zero");
    double const sp = std::sqrt(pooled_var);

    std::vector<PairwiseEntry> out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            auto const& [li, xi] = groups[i];
            auto const& [lj, xj] = groups[j];
            double const se = sp * std::sqrt(1.0 / static_cast<double>(xi.size()) + 1.0 / static_cast<double>(xj.size()));
            TTestResult r;
            r.t = (mean(xi) - mean(xj)) / se;
            r.df = df;
            r.p_two_sided = tail_probability(Distribution::StudentT, r.t, df);
            out.push_back({li, lj, r});
        }
    }
    return out;
}

AnovaResult anova_oneway(Groups const& groups)
{
    require_groups(groups);
    double grand = 0.0;
    double total = 0.0;
    for (auto const& [label, xs] : groups) {
        grand += std::accumulate(xs.begin(), xs.end(), 0.0);
        total += static_cast<double>(xs.size());
    }
    grand /= total;

    AnovaResult r;
    for (auto const& [label, xs] : groups) {
        double const m = mean(xs);
        r.ss_between += static_cast<double>(xs.size()) * (m - grand) * (m - grand);
        r.ss_within += sum_squared_deviations(xs);
    }
    if (!(r.ss_within > 0.0))
        throw StatsError(StatsErrorCode::ZeroVariance, "within-group variance is zero");

    r.df_between = static_cast<double>(groups.size()) - 1.0;
    r.df_within = total - static_cast<double>(groups.size());
    r.f = (r.ss_between / r.df_between) / (r.ss_within / r.df_within);
    r.p = tail_probability(Distribution::FisherF, r.f, r.df_between, r.df_within);
    return r;
}

Summary summarize(Groups const& groups)
{
    if (groups.size() != 2)
        throw StatsError(StatsErrorCode::TooFewGroups, "saving needs exactly two groups");
    Summary s;
    for (auto const& [label, xs] : groups) {
        if (xs.empty())
            throw StatsError(StatsErrorCode::TooFewGroups, "group '" + label + "' is empty");
        s.means.emplace_back(label, mean(xs));
    }
    auto const& a = s.means[0];
    auto const& b = s.means[1];
    auto const& slow = b.second > a.second ? b : a;
    auto const& fast = b.second > a.second ? a : b;
    s.baseline = slow.first;
    s.treatment = fast.first;
    s.diff = slow.second - fast.second;
    s.saving_percent = slow.second == 0.0 ? 0.0 : s.diff / slow.second * 100.0;
    return s;
}

} // namespace wmbench
