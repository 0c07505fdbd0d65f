#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wmbench {

enum class StatsErrorCode {
    NonpositiveWidth,
    LengthMismatch,
    ZeroVariance,
    TooFewGroups,
    InvalidDf,
    BadHeader,
    BadRow,
};

std::string_view to_string(StatsErrorCode code);

class StatsError : public std::runtime_error {
public:
    StatsError(StatsErrorCode code, std::string const& message, std::optional<int> line = std::nullopt)
        : std::runtime_error(message)
        , code_(code)
        , line_(line)
    { }

    StatsErrorCode code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    StatsErrorCode code_;
    std::optional<int> line_;
};

/// Labelled samples in first-appearance order.
using Groups = std::vector<std::pair<std::string, std::vector<double>>>;

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
/// Continued fraction (modified Lentz), evaluated on whichever side of the
/// symmetry point converges fastest.
double incomplete_beta(double x, double a, double b);

enum class Distribution { StudentT, FisherF };

/// Two-sided tail of Student's t (df1 degrees of freedom; df2 ignored) or
/// upper tail of F(df1, df2). Throws InvalidDf for non-positive or
/// non-finite degrees of freedom.
double tail_probability(Distribution kind, double statistic, double df1, double df2 = 0.0);

double mean(std::span<double const> xs);
/// Sample variance, n - 1 denominator.
double variance(std::span<double const> xs);

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p_two_sided = 1.0;
};

/// Paired-samples t on d = x - y. Throws LengthMismatch (also for fewer
/// than two pairs) and ZeroVariance when every difference is equal.
TTestResult paired_t_test(std::span<double const> x, std::span<double const> y);

struct PairwiseEntry {
    std::string first;
    std::string second;
    TTestResult result;
};

/// t tests between every pair of groups using one SD pooled over all of
/// them, df = N - k, two-sided, no multiplicity adjustment. Entries run
/// over pairs (i, j), i < j, in group order.
std::vector<PairwiseEntry> pooled_pairwise_t(Groups const& groups);

struct AnovaResult {
    double f = 0.0;
    double df_between = 0.0;
    double df_within = 0.0;
    double ss_between = 0.0;
    double ss_within = 0.0;
    double p = 1.0;
};

AnovaResult anova_oneway(Groups const& groups);

struct Summary {
    std::vector<std::pair<std::string, double>> means;
    std::string baseline;
    std::string treatment;
    double diff = 0.0;
    double saving_percent = 0.0;
};

/// Means plus the saving of the faster group against the slower one.
/// Requires exactly two groups (TooFewGroups otherwise).
Summary summarize(Groups const& groups);

} // namespace wmbench
