#include "oracles.hpp"

#include "patav/errors.hpp"
#include "patav/permutation.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace patav;

namespace {

std::vector<Permutation> all_of(int n) {
    std::vector<Permutation> out;
    for (auto& v : oracle::all_permutations(n)) out.emplace_back(std::move(v));
    return out;
}

} // namespace

TEST(Permutation, RejectsNonPermutations) {
    EXPECT_THROW(Permutation({1, 1}), ArgumentError);
    EXPECT_THROW(Permutation({0, 1}), ArgumentError);
    EXPECT_THROW(Permutation({1, 3}), ArgumentError);
    EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(Permutation, ParseAndPrint) {
    EXPECT_EQ(Permutation::parse("2,3,1"), Permutation({2, 3, 1}));
    EXPECT_EQ(Permutation::parse("231"), Permutation({2, 3, 1}));
    EXPECT_EQ(Permutation::parse("").size(), 0u);
    EXPECT_EQ(Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}).to_string(), "10,1,2,3,4,5,6,7,8,9");
    EXPECT_THROW(Permutation::parse("1,,2"), ArgumentError);
    EXPECT_THROW(Permutation::parse("1,x"), ArgumentError);
}

TEST(Permutation, PatternAndStatisticNames) {
    for (PatternId p : kAllPatterns) EXPECT_EQ(parse_pattern(to_string(p)), p);
    EXPECT_THROW(parse_pattern("1234"), ArgumentError);
    for (StatisticId s : {StatisticId::Alt, StatisticId::AltPM, StatisticId::Lis})
        EXPECT_EQ(parse_statistic(to_string(s)), s);
}

TEST(ContainsPattern, SpecExamples) {
    EXPECT_TRUE(contains_pattern(Permutation::parse("231"), PatternId::P231));
    EXPECT_FALSE(contains_pattern(Permutation::parse("123"), PatternId::P321));
    EXPECT_FALSE(contains_pattern(Permutation::parse("1423"), PatternId::P231));
    EXPECT_FALSE(contains_pattern(Permutation::parse("12"), PatternId::P123));
}

TEST(ContainsPattern, MatchesTripleScanOracle) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& v : oracle::all_permutations(n)) {
            const Permutation p(v);
            for (PatternId id : kAllPatterns) {
                const auto pat = pattern_permutation(id);
                const std::vector<int> pv(pat.values().begin(), pat.values().end());
                ASSERT_EQ(contains_pattern(p, id), oracle::contains(v, pv)) << p.to_string() << " " << to_string(id);
                ASSERT_EQ(contains_pattern(p, pat), oracle::contains(v, pv));
            }
        }
}

TEST(ContainsPattern, GeneralPatterns) {
    for (const auto& v : oracle::all_permutations(7)) {
        const Permutation p(v);
        for (const auto& pat : {std::vector<int>{2, 1}, {1, 3, 2, 4}, {2, 4, 1, 3}})
            ASSERT_EQ(contains_pattern(p, Permutation(pat)), oracle::contains(v, pat));
    }
}

TEST(Symmetry, SpecExamples) {
    EXPECT_EQ(reverse(Permutation::parse("132")), Permutation::parse("231"));
    EXPECT_EQ(complement(Permutation::parse("231")), Permutation::parse("213"));
    EXPECT_EQ(reverse_complement(Permutation::parse("231")), Permutation::parse("312"));
    EXPECT_EQ(reverse(Permutation()), Permutation());
}

TEST(Symmetry, InvolutionsAndCommutation) {
    for (const auto& p : all_of(6)) {
        ASSERT_EQ(reverse(reverse(p)), p);
        ASSERT_EQ(complement(complement(p)), p);
        ASSERT_EQ(reverse_complement(reverse_complement(p)), p);
        ASSERT_EQ(reverse_complement(p), complement(reverse(p)));
        ASSERT_EQ(reverse_complement(p), reverse(complement(p)));
    }
}

TEST(Symmetry, MapsAvoidersOf231OntoImageClasses) {
    for (int n = 0; n <= 8; ++n) {
        std::set<Permutation> av231, av132, av213, av312;
        for (const auto& p : all_of(n)) {
            if (avoids(p, PatternId::P231)) av231.insert(p);
            if (avoids(p, PatternId::P132)) av132.insert(p);
            if (avoids(p, PatternId::P213)) av213.insert(p);
            if (avoids(p, PatternId::P312)) av312.insert(p);
        }
        std::set<Permutation> rev, com, rc;
        for (const auto& p : av231) {
            rev.insert(reverse(p));
            com.insert(complement(p));
            rc.insert(reverse_complement(p));
        }
        EXPECT_EQ(rev, av132) << n;
        EXPECT_EQ(com, av213) << n;
        EXPECT_EQ(rc, av312) << n;
    }
}

TEST(Statistics, SpecExamples) {
    EXPECT_EQ(stat_alt(Permutation::parse("123")), 2);
    EXPECT_EQ(stat_alt(Permutation::parse("132")), 3);
    EXPECT_EQ(stat_alt(Permutation::parse("21")), 2);
    EXPECT_EQ(stat_alt_pm(Permutation::parse("132")), 3);
    EXPECT_EQ(stat_alt_pm(Permutation::parse("123")), 1);
    EXPECT_EQ(stat_alt_pm(Permutation::parse("21")), 1);
    EXPECT_EQ(stat_lis(Permutation::parse("321")), 1);
    EXPECT_EQ(stat_lis(Permutation::parse("123")), 3);
    EXPECT_EQ(stat_lis(Permutation::parse("1423")), 3);
}

TEST(Statistics, EmptyAndSingleton) {
    const Permutation empty;
    EXPECT_EQ(stat_alt(empty), 0);
    EXPECT_EQ(stat_alt_pm(empty), 0);
    EXPECT_EQ(stat_lis(empty), 0);
    EXPECT_EQ(stat_alt(Permutation{1}), 1);
    EXPECT_EQ(stat_alt_pm(Permutation{1}), 1);
    EXPECT_EQ(stat_lis(Permutation{1}), 1);
}

TEST(Statistics, MatchSubsequenceOracleExhaustively) {
    for (int n = 0; n <= 9; ++n)
        for (const auto& v : oracle::all_permutations(n)) {
            const Permutation p(v);
            ASSERT_EQ(stat_alt(p), oracle::alt(v)) << p.to_string();
            ASSERT_EQ(stat_alt_pm(p), oracle::alt_pm(v)) << p.to_string();
            ASSERT_EQ(stat_lis(p), oracle::lis(v)) << p.to_string();
        }
}

TEST(Statistics, Invariants) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : all_of(n)) {
            const int a = stat_alt(p), apm = stat_alt_pm(p), l = stat_lis(p);
            ASSERT_GE(a - apm, 0);
            ASSERT_LE(a - apm, 2);
            ASSERT_EQ(apm % 2, 1);
            ASSERT_GE(l, 1);
            ASSERT_LE(l, n);
            // All three symmetry maps preserve A_n; only reverse-complement preserves L_n.
            ASSERT_EQ(stat_alt(reverse(p)), a);
            ASSERT_EQ(stat_alt(complement(p)), a);
            ASSERT_EQ(stat_alt(reverse_complement(p)), a);
            ASSERT_EQ(stat_lis(reverse_complement(p)), l);
        }
}

TEST(Statistics, EvaluateDispatches) {
    const auto p = Permutation::parse("2,4,1,3");
    EXPECT_EQ(evaluate(StatisticId::Alt, p), stat_alt(p));
    EXPECT_EQ(evaluate(StatisticId::AltPM, p), stat_alt_pm(p));
    EXPECT_EQ(evaluate(StatisticId::Lis, p), stat_lis(p));
}

TEST(Statistics, LargeInputIsFast) {
    std::vector<int> v(200000);
    for (int i = 0; i < 200000; ++i) v[i] = (i % 2 == 0) ? i / 2 + 1 : 200000 - i / 2;
    const Permutation p(v);
    EXPECT_EQ(stat_alt(p), 200000);
    EXPECT_EQ(stat_lis(p), 100001);
}
