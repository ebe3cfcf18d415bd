#include "oracles.hpp"

#include "patav/catalan.hpp"
#include "patav/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>

using namespace patav;

TEST(Catalan, SpecExamples) {
    EXPECT_EQ(catalan(0), 1);
    EXPECT_EQ(catalan(1), 1);
    EXPECT_EQ(catalan(2), 2);
    EXPECT_EQ(catalan(5), 42);
    EXPECT_EQ(catalan(12), 208012);
    EXPECT_THROW(catalan(-1), ArgumentError);
}

TEST(Catalan, MatchesBinomialFormula) {
    for (int n = 0; n <= 300; ++n) ASSERT_EQ(catalan(n), oracle::catalan(n)) << n;
}

TEST(Catalan, SegnerRecurrence) {
    for (int n = 0; n <= 64; ++n) {
        mpz_class sum = 0;
        for (int j = 0; j <= n; ++j) sum += catalan(j) * catalan(n - j);
        ASSERT_EQ(catalan(n + 1), sum) << n;
    }
}

TEST(Catalan, LogValues) {
    for (int n : {0, 1, 2, 10, 100, 1000, 4096}) {
        const double exact = log_of(oracle::catalan(n));
        EXPECT_NEAR(log_catalan(n), exact, 1e-12 * std::max(1.0, exact)) << n;
    }
    // Beyond the exact range the log-gamma path takes over; it must join smoothly.
    const int edge = kExactLogRange;
    const double lg = std::lgamma(2.0 * (edge + 1) + 1) - 2 * std::lgamma(edge + 2.0) - std::log(edge + 2.0);
    EXPECT_NEAR(log_catalan(edge + 1), lg, 1e-9 * lg);
    EXPECT_NEAR(log_catalan(edge + 1) - log_catalan(edge), std::log(2.0 * (2 * edge + 1) / (edge + 2)), 1e-8);
}

TEST(Catalan, ScaledLogApproachesLog4) {
    EXPECT_NEAR(log_catalan(4096) / 4096, std::log(4.0), 0.01);
    EXPECT_NEAR(log_catalan(2048) / 2048, std::log(4.0), 0.02);
}

TEST(Catalan, Asymptotic) {
    EXPECT_NEAR(catalan_asymptotic(1).log_value, std::log(4 / std::sqrt(std::numbers::pi)), 1e-15);
    const auto a = catalan_asymptotic(1000);
    EXPECT_FALSE(a.value.has_value());
    // C_n / (4^n / (sqrt(pi) n^{3/2})) = 1 - 9/(8n) + 145/(128 n^2) + O(n^-3).
    const double ratio = std::exp(log_of(catalan(1000)) - a.log_value);
    EXPECT_LT(ratio, 1.0);
    EXPECT_NEAR(ratio, 1 - 9.0 / 8000 + 145.0 / 128e6, 1e-8);
    for (int n : {10, 100, 1000, 4000})
        EXPECT_LT(std::exp(log_of(catalan(n)) - catalan_asymptotic(n).log_value),
                  std::exp(log_of(catalan(4 * n)) - catalan_asymptotic(4 * n).log_value));
    ASSERT_TRUE(catalan_asymptotic(10).value.has_value());
    EXPECT_NEAR(*catalan_asymptotic(10).value, std::exp(catalan_asymptotic(10).log_value), 1e-6);
    for (int n = 1; n < 500; ++n) ASSERT_LT(catalan_asymptotic(n).log_value, catalan_asymptotic(n + 1).log_value);
    EXPECT_THROW(catalan_asymptotic(0), ArgumentError);
}

TEST(Catalan, SplitProbability) {
    EXPECT_EQ(split_probability(1, 3), mpq_class(2, 5));
    EXPECT_EQ(split_probability(1, 1), 1);
    for (int n = 1; n <= 40; ++n) {
        mpq_class sum = 0;
        for (int j = 1; j <= n; ++j) {
            sum += split_probability(j, n);
            ASSERT_NEAR(split_probability_double(j, n), split_probability(j, n).get_d(), 1e-14);
        }
        ASSERT_EQ(sum, 1) << n;
    }
    EXPECT_THROW(split_probability(0, 3), ArgumentError);
    EXPECT_THROW(split_probability(4, 3), ArgumentError);
}

TEST(Catalan, SplitProbabilityCountsAvoidersWithMaxFirst) {
    // Avoiders of 231 in S_3 with sigma_1 = 3 are 312 and 321: 2 of 5.
    long hits = 0;
    for (const auto& v : oracle::all_permutations(3))
        if (!oracle::contains(v, {2, 3, 1}) && v[0] == 3) ++hits;
    EXPECT_EQ(mpq_class(hits, 5), split_probability(1, 3));
}

TEST(Catalan, ConcurrentGrowth) {
    CatalanCache cache;
    std::vector<std::jthread> threads;
    std::vector<mpz_class> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[t] = cache.exact(200 + 10 * t); });
    threads.clear();
    for (int t = 0; t < 8; ++t) EXPECT_EQ(results[t], oracle::catalan(200 + 10 * t));
}
