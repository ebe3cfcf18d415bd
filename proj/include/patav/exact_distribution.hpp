#pragma once

#include "patav/count_table.hpp"

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace patav {

// Exact laws of A_n^{+,-} and L_n under the uniform 231-avoiding measure,
// built from the count-polynomial recurrences obtained by conditioning on
// the position of the largest entry:
//
//   P_n(u) = u * sum_{j=2}^{n-1} P_{j-1}(u) P_{n-j}(u) + 2 P_{n-1}(u),  n >= 3
//   Q_n(u) = sum_{j=1}^{n-1} Q_{j-1}(u) Q_{n-j}(u) + u Q_{n-1}(u),      n >= 2
//
// with P_0 = 1, P_1 = u, P_2 = 2u and Q_0 = 1, Q_1 = u. P_n(e^lambda) / C_n
// is the moment generating function of A_n^{+,-}, likewise Q_n for L_n. The
// 312-avoiding class yields the identical Q recurrence.

struct DistributionLimits {
    int exact_cap = 256;
    int logfloat_cap = 2048;
};

enum class Mode { Exact, LogFloat };
Mode parse_mode(std::string_view text);

/// Tables for every length 0..n.
std::vector<CountTable> alt_pm_count_sequence(int n, DistributionLimits limits = {});
std::vector<CountTable> lis_count_sequence(int n, DistributionLimits limits = {});
std::vector<LogFloatTable> alt_pm_log_sequence(int n, DistributionLimits limits = {});
std::vector<LogFloatTable> lis_log_sequence(int n, DistributionLimits limits = {});

CountTable alt_pm_counts(int n, DistributionLimits limits = {});
CountTable lis_counts(int n, DistributionLimits limits = {});
LogFloatTable alt_pm_log_counts(int n, DistributionLimits limits = {});
LogFloatTable lis_log_counts(int n, DistributionLimits limits = {});

/// Statistic must be AltPM or Lis.
CountTable recurrence_counts(StatisticId stat, int n, DistributionLimits limits = {});
LogFloatTable recurrence_log_counts(StatisticId stat, int n, DistributionLimits limits = {});
std::vector<LogFloatTable> recurrence_log_sequence(StatisticId stat, int n, DistributionLimits limits = {});

/// log M_n(lambda) = log(sum_k N_n(k) e^{lambda k} / C_n), in the log domain.
double log_mgf(const CountTable& table, double lambda);
double log_mgf(const LogFloatTable& table, double lambda);
double mgf(const CountTable& table, double lambda);
double mgf(const LogFloatTable& table, double lambda);
/// (1/n) log M_n(lambda); requires n >= 1.
double scaled_log_mgf(const CountTable& table, double lambda);
double scaled_log_mgf(const LogFloatTable& table, double lambda);

/// log(T_n / T_{n-1}) with T_n = C_n M_n(lambda), from two consecutive
/// tables. Converges to log 4 + Lambda(lambda) with O(1/n) error.
double ratio_limit_estimate(const LogFloatTable& current, const LogFloatTable& previous, double lambda);
/// Builds the log-float sequence up to n. Statistic must be AltPM or Lis.
double ratio_limit_estimate(StatisticId stat, double lambda, int n, DistributionLimits limits = {});

struct ExactMoments {
    mpq_class mean;
    mpq_class variance;
};
struct FloatMoments {
    double mean;
    double variance;
};

ExactMoments mean_variance(const CountTable& table);
/// Computed from normalized weights exp(log N(k) - log C_n); relative error
/// of order 1e-13 for the sizes supported.
FloatMoments mean_variance(const LogFloatTable& table);

enum class Side { Ge, Gt, Le, Lt };
Side parse_side(std::string_view text);
std::string_view to_string(Side side);

/// True when value k lies on `side` of the threshold n * x.
bool in_tail(int k, int n, double x, Side side);

/// P(stat `side` n x). Requires 0 < x <= 1.
mpq_class tail_probability(const CountTable& table, double x, Side side);
/// log P(stat `side` n x); -inf for an empty tail.
double log_tail_probability(const CountTable& table, double x, Side side);
double log_tail_probability(const LogFloatTable& table, double x, Side side);

} // namespace patav
