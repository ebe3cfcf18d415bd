#include "patav/catalan.hpp"
#include "patav/errors.hpp"
#include "patav/exact_distribution.hpp"
#include "patav/rate_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace patav;

namespace {

const double kLog2 = std::log(2.0);
const double kLog4 = std::log(4.0);

// Brute-force supremum over a fine lambda grid, refined once.
double grid_sup(Family f, double x) {
    double best = -INFINITY, arg = 0;
    for (double l = -30; l <= 30; l += 1e-3) {
        const double v = l * x - scgf(f, l);
        if (v > best) best = v, arg = l;
    }
    for (double l = arg - 1e-3; l <= arg + 1e-3; l += 1e-7) best = std::max(best, l * x - scgf(f, l));
    return best;
}

} // namespace

TEST(Scgf, ClosedForms) {
    for (Family f : {Family::Alt, Family::Inc}) EXPECT_EQ(scgf(f, 0.0), 0.0);
    EXPECT_NEAR(scgf_alt(1.0), std::log(std::exp(1.0) + 1) - kLog2, 1e-15);
    EXPECT_NEAR(scgf_inc(1.0), 2 * std::log(std::exp(0.5) + 1) - kLog4, 1e-15);
    // Softplus form stays finite far from the origin.
    EXPECT_NEAR(scgf_alt(800.0), 800.0 - kLog2, 1e-9);
    EXPECT_NEAR(scgf_inc(-800.0), -kLog4, 1e-12);
}

TEST(Scgf, Convex) {
    for (Family f : {Family::Alt, Family::Inc})
        for (double l = -10; l <= 10; l += 0.05)
            ASSERT_GE(scgf(f, l - 0.05) - 2 * scgf(f, l) + scgf(f, l + 0.05), -1e-12);
}

TEST(RateFunctions, SpecExamples) {
    EXPECT_NEAR(i_alt(0.5), 0.0, 1e-16);
    EXPECT_NEAR(i_alt(0.75), 0.130812, 1e-6);
    EXPECT_EQ(i_inc(1.0), kLog4);
    EXPECT_NEAR(i_inc(0.5), 0.0, 1e-16);
    EXPECT_NEAR(i_inc(0.75), 0.261624, 1e-6);
    EXPECT_EQ(i_alt(0.0), kLog2);
    EXPECT_EQ(i_alt(1.0), kLog2);
    EXPECT_THROW(i_alt(1.1), ArgumentError);
    EXPECT_THROW(i_inc(-0.1), ArgumentError);
    EXPECT_THROW(i_alt(NAN), ArgumentError);
}

TEST(RateFunctions, Properties) {
    for (int i = 1; i < 1000; ++i) {
        const double x = i / 1000.0;
        ASSERT_NEAR(i_alt(x), i_alt(1 - x), 1e-12);
        ASSERT_NEAR(i_inc(x), 2 * i_alt(x), 1e-12);
        ASSERT_GE(i_alt(x), 0.0);
        if (i != 500) {
            ASSERT_GT(i_alt(x), 0.0);
        }
        if (i > 1 && i < 999) {
            const double h = 1e-3;
            ASSERT_GE(i_alt(x - h) - 2 * i_alt(x) + i_alt(x + h), -1e-10);
            ASSERT_GE(i_inc(x - h) - 2 * i_inc(x) + i_inc(x + h), -1e-10);
        }
    }
    EXPECT_NEAR(i_alt(1e-9), kLog2, 1e-7);
    EXPECT_NEAR(i_inc(1 - 1e-9), kLog4, 1e-7);
}

TEST(Lft, SpecExamples) {
    const auto half = lft_numeric(Family::Alt, 0.5);
    EXPECT_NEAR(half.value, 0.0, 1e-15);
    EXPECT_NEAR(half.lambda_star, 0.0, 1e-15);
    EXPECT_NEAR(lft_numeric(Family::Inc, 0.75).lambda_star, 2 * std::log(3.0), 1e-12);
    EXPECT_NEAR(lft_numeric(Family::Inc, 0.75).lambda_star, 2.19722, 1e-5);
    for (int i = 1; i <= 9; ++i) {
        const double x = i / 10.0;
        EXPECT_NEAR(lft_numeric(Family::Alt, x).value, i_alt(x), 1e-9);
        EXPECT_NEAR(lft_numeric(Family::Inc, x).value, i_inc(x), 1e-9);
    }
}

TEST(Lft, TwoPathsAgreeAndMatchGridOracle) {
    for (Family f : {Family::Alt, Family::Inc})
        for (double x : {0.01, 0.1, 0.33, 0.5, 0.62, 0.9, 0.99}) {
            const auto r = lft_numeric(f, x);
            ASSERT_NEAR(r.value, r.search_value, 1e-9);
            ASSERT_NEAR(r.lambda_star, r.search_lambda_star, 1e-4);
            ASSERT_NEAR(r.lambda_star, lambda_star(f, x), 1e-15);
            ASSERT_NEAR(r.value, grid_sup(f, x), 1e-9);
        }
}

TEST(Lft, SaturatesNearTheEndpoints) {
    EXPECT_THROW(lft_numeric(Family::Inc, 1 - 1e-12), SaturationError);
    try {
        lft_numeric(Family::Alt, 1e-20);
        FAIL();
    } catch (const SaturationError& e) {
        EXPECT_EQ(e.boundary_value(), kLog2);
    }
    EXPECT_THROW(lft_numeric(Family::Alt, 0.0), ArgumentError);
    EXPECT_THROW(lft_numeric(Family::Alt, 1.0), ArgumentError);
}

TEST(RelativeEntropy, EqualsRateFunction) {
    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        ASSERT_NEAR(relative_entropy_form(Family::Alt, x), i_alt(x), 1e-12);
        ASSERT_NEAR(relative_entropy_form(Family::Inc, x), i_inc(x), 1e-12);
        ASSERT_NEAR(relative_entropy_form(Family::Alt, x), x * std::log(2 * x) + (1 - x) * std::log(2 * (1 - x)),
                    1e-12);
    }
    EXPECT_NEAR(relative_entropy_form(Family::Alt, 0.5), 0.0, 1e-16);
    EXPECT_THROW(relative_entropy_form(Family::Inc, 1.0), ArgumentError);
}

TEST(LdpSlope, LisEndpoint) {
    const auto r = ldp_slope_exact(lis_counts(6), 1.0, Side::Ge);
    EXPECT_NEAR(r.exact_slope, std::log(132.0) / 6, 1e-14);
    EXPECT_EQ(r.closed_form, kLog4);
    EXPECT_NEAR(r.gap, kLog4 - std::log(132.0) / 6, 1e-14);
    double previous = r.gap;
    for (int n : {12, 48, 192, 600}) {
        const auto rn = ldp_slope_exact(lis_log_counts(n), 1.0, Side::Ge);
        EXPECT_NEAR(rn.exact_slope, log_catalan(n) / n, 1e-9);
        EXPECT_LT(rn.gap, previous);
        previous = rn.gap;
    }
    EXPECT_THROW(ldp_slope_exact(alt_pm_counts(6), 1.0, Side::Ge), ArgumentError);
    EXPECT_THROW(ldp_slope_exact(lis_counts(6), 1.0, Side::Le), ArgumentError);
}

TEST(LdpSlope, ReportFields) {
    const auto t = alt_pm_counts(100);
    const auto r = ldp_slope_exact(t, 0.7, Side::Ge);
    EXPECT_EQ(r.family, Family::Alt);
    EXPECT_EQ(r.statistic, StatisticId::AltPM);
    EXPECT_EQ(r.n, 100);
    EXPECT_EQ(r.side, Side::Ge);
    EXPECT_EQ(r.closed_form, i_alt(0.7));
    EXPECT_NEAR(r.log_tail, log_of(tail_probability(t, 0.7, Side::Ge)), 1e-12);
    EXPECT_EQ(r.exact_slope, -r.log_tail / 100);
    EXPECT_EQ(r.gap, std::fabs(r.exact_slope - r.closed_form));
    EXPECT_FALSE(r.diagnostic.has_value());
    EXPECT_EQ(ldp_slope_exact(lis_counts(50), 0.3, Side::Le).family, Family::Inc);
}

TEST(LdpSlope, EmptyTailIsReportedNotThrown) {
    // A_4^{+,-} is at most 3, so {A >= 3.96} is empty.
    const auto r = ldp_slope_exact(alt_pm_counts(4), 0.99, Side::Ge);
    EXPECT_TRUE(std::isinf(r.exact_slope));
    EXPECT_TRUE(r.diagnostic.has_value());
}

TEST(LdpSlope, Headline512) {
    const auto apm = alt_pm_log_counts(512);
    const auto lis = lis_log_counts(512);
    EXPECT_LE(ldp_slope_exact(apm, 0.7, Side::Ge).gap, 0.05);
    EXPECT_LE(ldp_slope_exact(apm, 0.3, Side::Le).gap, 0.05);
    EXPECT_LE(ldp_slope_exact(lis, 0.7, Side::Ge).gap, 0.05);
    EXPECT_LE(ldp_slope_exact(lis, 0.3, Side::Le).gap, 0.05);
    // Both strict and non-strict conventions stay close to the same rate.
    EXPECT_LE(ldp_slope_exact(apm, 0.7, Side::Gt).gap, 0.05);
    EXPECT_LE(ldp_slope_exact(lis, 0.3, Side::Lt).gap, 0.05);
}

// The counting corollary lets n -> infinity first and epsilon -> 0 second.
// At fixed epsilon the n-limit of (1/n) log #{A >= (1 - epsilon) n} is
// log 4 - I(1 - epsilon), which only tends to log 2 as epsilon shrinks.
TEST(CountingCorollary, FixedEpsilonLimitAndSmallEpsilon) {
    const auto t = alt_pm_counts(256);
    auto scaled_log_count = [&](double x, Side side) {
        return (log_tail_probability(t, x, side) + log_of(catalan(256))) / 256;
    };
    EXPECT_NEAR(scaled_log_count(0.95, Side::Ge), kLog4 - i_alt(0.95), 0.1);
    EXPECT_NEAR(scaled_log_count(0.05, Side::Le), kLog4 - i_alt(0.05), 0.1);
    EXPECT_NEAR(scaled_log_count(0.99, Side::Ge), kLog2, 0.1);
}
