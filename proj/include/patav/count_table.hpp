#pragma once

#include "patav/permutation.hpp"

#include <gmpxx.h>

#include <vector>

namespace patav {

/// Exact distribution of a statistic over the avoiders of length n:
/// counts[k] = #{sigma : stat(sigma) = k}. Equivalently the coefficient list
/// of the count polynomial sum_k counts[k] u^k.
struct CountTable {
    int n = 0;
    StatisticId statistic = StatisticId::Lis;
    PatternId pattern = PatternId::P231;
    std::vector<mpz_class> counts;

    mpz_class total() const;
    /// Zero outside the stored range.
    mpz_class count(int k) const;
    /// Values k with a nonzero count, ascending.
    std::vector<int> support() const;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Floating counterpart for large n: log_counts[k] = log N_n(k), -inf where
/// the count is zero.
struct LogFloatTable {
    int n = 0;
    StatisticId statistic = StatisticId::Lis;
    PatternId pattern = PatternId::P231;
    std::vector<double> log_counts;

    double log_total() const;
    std::vector<int> support() const;
};

/// log-sum-exp with -inf entries ignored; -inf for an all-empty input.
double log_sum_exp(std::span<const double> xs);

LogFloatTable to_log_table(const CountTable& table);

} // namespace patav
