#include "oracles.hpp"
#include "wmbench/report.hpp"
#include "wmbench/samples.hpp"
#include "wmbench/stats.hpp"

#include <doctest.h>

#if __has_include(<boost/math/special_functions/beta.hpp>)
#include <boost/math/special_functions/beta.hpp>
#define HAVE_BOOST_IBETA 1
#endif

#include <random>

using namespace wmbench;

namespace {

StatsErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (StatsError const& e) {
        return e.code();
    }
    FAIL("expected a StatsError");
    return StatsErrorCode::BadRow;
}

double rel_err(double a, double b)
{
    return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

} // namespace

TEST_CASE("incomplete beta boundaries and symmetry")
{
    CHECK(incomplete_beta(0.0, 2.0, 3.0) == 0.0);
    CHECK(incomplete_beta(1.0, 2.0, 3.0) == 1.0);
    CHECK(incomplete_beta(0.5, 4.0, 4.0) == doctest::Approx(0.5).epsilon(1e-14));
    // I_x(1, 1) = x, I_x(a, 1) = x^a
    CHECK(incomplete_beta(0.3, 1.0, 1.0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(incomplete_beta(0.3, 3.0, 1.0) == doctest::Approx(0.027).epsilon(1e-13));
    for (double x : {0.01, 0.2, 0.5, 0.77, 0.999})
        CHECK(incomplete_beta(x, 2.5, 7.0) + incomplete_beta(1.0 - x, 7.0, 2.5) == doctest::Approx(1.0).epsilon(1e-13));
}

#ifdef HAVE_BOOST_IBETA
TEST_CASE("incomplete beta agrees with an independent implementation")
{
    for (double a : {0.5, 1.0, 2.5, 4.0, 15.0, 60.0}) {
        for (double b : {0.5, 1.0, 3.0, 10.0, 40.0}) {
            for (double x : {1e-6, 0.001, 0.05, 0.3, 0.5, 0.8, 0.99}) {
                double const want = boost::math::ibeta(a, b, x);
                INFO("a=" << a << " b=" << b << " x=" << x);
                if (want > 1e-250)
                    CHECK(rel_err(incomplete_beta(x, a, b), want) < 1e-10);
            }
        }
    }
}
#endif

TEST_CASE("t tail against quadrature and the df 2 closed form")
{
    for (double t : {0.1, 0.5, 1.0, 2.0, 4.0, 10.0, 30.0}) {
        CHECK(rel_err(tail_probability(Distribution::StudentT, t, 2.0), oracle::t2_two_sided_closed_form(t)) < 1e-12);
        for (double df : {1.0, 3.0, 8.0, 25.0}) {
            INFO("t=" << t << " df=" << df);
            CHECK(rel_err(tail_probability(Distribution::StudentT, t, df), oracle::t_two_sided_by_quadrature(t, df))
                  < 1e-9);
        }
    }
    CHECK(tail_probability(Distribution::StudentT, 0.0, 5.0) == doctest::Approx(1.0));
    CHECK(tail_probability(Distribution::StudentT, -2.0, 5.0) == tail_probability(Distribution::StudentT, 2.0, 5.0));
}

TEST_CASE("F tail is the square of the t tail")
{
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> t(0.0, 8.0);
    std::uniform_int_distribution<int> df(1, 60);
    for (int i = 0; i < 500; ++i) {
        double const tv = t(rng);
        double const d = df(rng);
        CHECK(rel_err(tail_probability(Distribution::FisherF, tv * tv, 1.0, d),
                      tail_probability(Distribution::StudentT, tv, d))
              < 1e-10);
    }
}

TEST_CASE("invalid degrees of freedom")
{
    CHECK(code_of([] { tail_probability(Distribution::StudentT, 1.0, 0.0); }) == StatsErrorCode::InvalidDf);
    CHECK(code_of([] { tail_probability(Distribution::FisherF, 1.0, 2.0, -1.0); }) == StatsErrorCode::InvalidDf);
    CHECK(code_of([] { tail_probability(Distribution::StudentT, 1.0, std::nan("")); }) == StatsErrorCode::InvalidDf);
}

TEST_CASE("paired t test")
{
    std::vector<double> const x{2, 4, 6};
    std::vector<double> const y{1, 3, 6};
    auto const r = paired_t_test(x, y);
    CHECK(r.t == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.df == 2.0);
    CHECK(r.p_two_sided == doctest::Approx(oracle::t2_two_sided_closed_form(2.0)).epsilon(1e-12));
    CHECK(r.p_two_sided == doctest::Approx(0.18350).epsilon(1e-4));

    std::vector<double> const short_y{1, 3};
    CHECK(code_of([&] { paired_t_test(x, short_y); }) == StatsErrorCode::LengthMismatch);
    std::vector<double> const shifted{1, 3, 5};
    CHECK(code_of([&] { paired_t_test(x, shifted); }) == StatsErrorCode::ZeroVariance);
    std::vector<double> const one{1};
    CHECK(code_of([&] { paired_t_test(one, one); }) == StatsErrorCode::LengthMismatch);
}

TEST_CASE("pooled pairwise t on two groups")
{
    Groups const g{{"a", {1, 2, 3}}, {"b", {3, 4, 5}}};
    auto const r = pooled_pairwise_t(g);
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == "a");
    CHECK(r[0].second == "b");
    CHECK(r[0].result.t == doctest::Approx(-2.449489742783178).epsilon(1e-12));
    CHECK(r[0].result.df == 4.0);
    CHECK(rel_err(r[0].result.p_two_sided, oracle::t_two_sided_by_quadrature(2.449489742783178, 4.0)) < 1e-9);
}

TEST_CASE("pooled pairwise covers every pair in order")
{
    Groups const g{{"a", {1, 2, 3}}, {"b", {3, 4, 5}}, {"c", {2, 2, 4}}};
    auto const r = pooled_pairwise_t(g);
    REQUIRE(r.size() == 3);
    CHECK((r[0].first + r[0].second + r[1].first + r[1].second + r[2].first + r[2].second) == "abacbc");
    for (auto const& e : r)
        CHECK(e.result.df == 6.0);
}

TEST_CASE("one-way ANOVA")
{
    auto const pair = anova_oneway({{"a", {1, 2, 3}}, {"b", {2, 3, 4}}});
    CHECK(pair.f == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(pair.df_between == 1.0);
    CHECK(pair.df_within == 4.0);

    Groups const g{{"a", {1, 2, 3}}, {"b", {2, 3, 4}}, {"c", {3, 4, 5}}};
    auto const r = anova_oneway(g);
    CHECK(r.f == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.df_between == 2.0);
    CHECK(r.df_within == 6.0);
    CHECK(r.ss_between == doctest::Approx(6.0));
    CHECK(r.ss_within == doctest::Approx(6.0));
    // upper tail of F(2, 6) at 3 is (1 + 2F/6)^-3
    CHECK(r.p == doctest::Approx(std::pow(1.0 + 2.0 * 3.0 / 6.0, -3.0)).epsilon(1e-12));

    Groups const two{{"a", {1, 2, 3, 4}}, {"b", {2, 4, 5, 7}}};
    auto const f = anova_oneway(two);
    auto const t = pooled_pairwise_t(two)[0].result;
    CHECK(f.f == doctest::Approx(t.t * t.t).epsilon(1e-12));
    CHECK(f.p == doctest::Approx(t.p_two_sided).epsilon(1e-12));

    CHECK(code_of([] { anova_oneway({{"a", {1, 2}}}); }) == StatsErrorCode::TooFewGroups);
    CHECK(code_of([] { anova_oneway({{"a", {1, 1}}, {"b", {2, 2}}}); }) == StatsErrorCode::ZeroVariance);
}

TEST_CASE("F equals t squared on random two-group data")
{
    std::mt19937 rng(77);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        std::vector<double> a(5 + i % 7), b(3 + i % 5);
        for (auto& v : a)
            v = noise(rng);
        for (auto& v : b)
            v = noise(rng) + 0.5;
        Groups const g{{"a", a}, {"b", b}};
        auto const t = pooled_pairwise_t(g)[0].result;
        CHECK(rel_err(anova_oneway(g).f, t.t * t.t) < 1e-9);
    }
}

TEST_CASE("translation leaves the tests alone, separation lowers p")
{
    Groups g{{"a", {10, 12, 11, 13}}, {"b", {14, 15, 13, 17}}};
    auto const base = pooled_pairwise_t(g)[0].result;
    Groups shifted = g;
    for (auto& [name, xs] : shifted)
        for (auto& v : xs)
            v += 1000.0;
    CHECK(pooled_pairwise_t(shifted)[0].result.t == doctest::Approx(base.t).epsilon(1e-9));

    double prev = 1.0;
    for (double gap : {0.0, 1.0, 2.0, 4.0, 8.0}) {
        Groups moved = g;
        for (auto& v : moved[1].second)
            v += gap;
        double const p = pooled_pairwise_t(moved)[0].result.p_two_sided;
        CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("loading samples")
{
    auto const s = load_samples("time,type\n80,normal\n49.5,rcwm\r\n\n92,normal\n");
    REQUIRE(s.size() == 3);
    CHECK(s[1] == Sample{49.5, "rcwm"});
    auto const g = group_samples(s);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == "normal");
    CHECK(g[0].second == std::vector<double>{80, 92});

    CHECK(code_of([] { load_samples("t,type\n1,a\n"); }) == StatsErrorCode::BadHeader);
    CHECK(code_of([] { load_samples(""); }) == StatsErrorCode::BadHeader);
    try {
        load_samples("time,type\n1,a\nabc,b\n");
        FAIL("no error");
    } catch (StatsError const& e) {
        CHECK(e.code() == StatsErrorCode::BadRow);
        CHECK(e.line() == 3);
    }
    CHECK(code_of([] { load_samples("time,type\n1\n"); }) == StatsErrorCode::BadRow);
    CHECK(code_of([] { load_samples("time,type\n1,\n"); }) == StatsErrorCode::BadRow);
}

TEST_CASE("summary of two groups")
{
    Groups const g{{"normal", {86.2}}, {"rcwm", {53.6}}};
    auto const s = summarize(g);
    CHECK(s.baseline == "normal");
    CHECK(s.treatment == "rcwm");
    CHECK(s.diff == doctest::Approx(32.6).epsilon(1e-12));
    CHECK(s.saving_percent == doctest::Approx(37.819).epsilon(1e-4));
    CHECK(code_of([] { summarize({{"a", {1.0}}}); }) == StatsErrorCode::TooFewGroups);
}

TEST_CASE("report wording")
{
    Groups const g{{"normal", {80, 92, 86, 81, 92}}, {"rcwm", {49, 59, 53, 51, 56}}};
    auto const text = stats_report(g);
    CHECK(text.find("diff = 32.60 s") != std::string::npos);
    CHECK(text.find("saving = 37.82%") != std::string::npos);
    CHECK(text.find("reject null at 0.05") != std::string::npos);

    Groups const close{{"a", {1, 2, 3}}, {"b", {1.5, 2.5, 3.5}}};
    CHECK(stats_report(close).find("retain null at 0.05") != std::string::npos);
}
