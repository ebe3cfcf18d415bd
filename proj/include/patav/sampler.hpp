#pragma once

#include "patav/exact_distribution.hpp"
#include "patav/permutation.hpp"
#include "patav/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace patav {

/// Largest block size whose split position is drawn with exact integer
/// arithmetic; larger blocks use log-domain double probabilities.
inline constexpr int kExactSplitRange = 256;

/// Draws j in [1, m] with probability C_{j-1} C_{m-j} / C_m.
int draw_split_position(int m, Rng& rng);

/// Exactly uniform 231-avoider of length n: place n at a split position,
/// then fill the left block with a uniform avoider on the smallest values
/// and the right block with one on the remaining values.
Permutation sample_231(int n, Rng& rng);
/// As sample_231, writing into `out` (resized to n).
void sample_231_into(int n, Rng& rng, std::vector<int>& out);

struct SamplerConfig {
    PatternId pattern = PatternId::P231;
    int n = 1;
    std::uint64_t seed = 0;
    long long reps = 1;
};

/// True for the four patterns with a direct sampler (231 and its reverse,
/// complement and reverse-complement images).
bool has_direct_sampler(PatternId pattern);

/// Uniform avoider of config.pattern and length config.n. 132, 213 and 312
/// are the reverse, complement and reverse-complement of a 231 sample.
/// Throws UnsupportedPatternError for 123 and 321.
Permutation sample_avoider(const SamplerConfig& config, Rng& rng);
void sample_avoider_into(PatternId pattern, int n, Rng& rng, std::vector<int>& out);

/// Visits the config.reps samples in replicate order. Replicate r uses
/// Rng::for_replicate(config.seed, r), so the stream depends only on the
/// config.
void for_each_sample(const SamplerConfig& config, const std::function<void(long long, std::span<const int>)>& visit);

/// counts[k] = number of replicates with statistic value k. Replicates are
/// split across `workers` threads; the result does not depend on it.
std::vector<std::uint64_t> statistic_histogram(const SamplerConfig& config, StatisticId stat, int workers = 1);

struct TailEstimate {
    StatisticId statistic;
    int n;
    double x;
    Side side;
    long long reps;
    long long hits;
    double p_hat;
    double ci_radius;  // 95% normal approximation
    std::optional<double> slope_hat;  // -(1/n) log p_hat when p_hat > 0
    bool below_resolution;
    double upper_bound;  // 3 / reps when below resolution, else p_hat + ci_radius
};

/// Requires reps >= 100.
TailEstimate estimate_tail(const SamplerConfig& config, StatisticId stat, double x, Side side, int workers = 1);

struct MomentEstimate {
    StatisticId statistic;
    int n;
    long long reps;
    double mean;
    double variance;  // unbiased sample variance
    double standard_error;  // sqrt(variance / reps)
};

/// Requires reps >= 10^4.
MomentEstimate sample_variance_check(const SamplerConfig& config, StatisticId stat, int workers = 1);
MomentEstimate moments_from_histogram(std::span<const std::uint64_t> histogram, StatisticId stat, int n);

struct ChiSquareResult {
    double statistic;
    int degrees_of_freedom;
    double p_value;
};

/// Pearson goodness of fit of `observed` against `probabilities`. Cells
/// with expected count below 5 are pooled into one cell.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> probabilities);

} // namespace patav
