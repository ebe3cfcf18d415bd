#include "patav/sampler.hpp"

#include "patav/catalan.hpp"
#include "patav/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace patav {

namespace {

// Cumulative split weights W_m(j) = sum_{i <= j} C_{i-1} C_{m-i}, which end
// at C_m. Machine words while C_m fits, big integers up to kExactSplitRange.
struct SplitTables {
    std::vector<std::vector<std::uint64_t>> word;
    std::vector<std::vector<mpz_class>> big;

    SplitTables() : word(kExactSplitRange + 1), big(kExactSplitRange + 1) {
        for (int m = 1; m <= kExactSplitRange; ++m) {
            std::vector<mpz_class> cum(m);
            mpz_class acc = 0;
            for (int j = 1; j <= m; ++j) {
                acc += catalan(j - 1) * catalan(m - j);
                cum[j - 1] = acc;
            }
            if (acc != catalan(m)) throw InternalConsistencyError("split weights do not sum to C_m");
            if (mpz_fits_ulong_p(acc.get_mpz_t()) && sizeof(unsigned long) == sizeof(std::uint64_t)) {
                word[m].reserve(m);
                for (const auto& c : cum) word[m].push_back(c.get_ui());
            } else {
                big[m] = std::move(cum);
            }
        }
    }

    static const SplitTables& get() {
        static const SplitTables tables;
        return tables;
    }
};

[[noreturn]] void throw_unsupported(PatternId pattern) {
    throw UnsupportedPatternError("no direct uniform sampler for pattern " + to_string(pattern) +
                                  "; A_n has the same law under 231 and 321, otherwise enumerate at small n");
}

int draw_split_float(int m, Rng& rng) {
    // The law is U-shaped with most mass near both ends, so the inverse CDF
    // is scanned outside-in: j = 1, m, 2, m - 1, ...
    const double target = rng.uniform01();
    const double log_cm = log_catalan(m);
    double acc = 0.0;
    int lo = 1, hi = m, last = 1;
    for (int t = 0; lo <= hi; ++t) {
        const int j = (t % 2 == 0) ? lo++ : hi--;
        acc += std::exp(log_catalan(j - 1) + log_catalan(m - j) - log_cm);
        last = j;
        if (target < acc) return j;
    }
    return last;
}

void apply_symmetry(PatternId pattern, std::vector<int>& v) {
    const int n1 = static_cast<int>(v.size()) + 1;
    switch (pattern) {
    case PatternId::P231: return;
    case PatternId::P132: std::reverse(v.begin(), v.end()); return;
    case PatternId::P213:
        for (int& x : v) x = n1 - x;
        return;
    case PatternId::P312:
        std::reverse(v.begin(), v.end());
        for (int& x : v) x = n1 - x;
        return;
    default: throw_unsupported(pattern);
    }
}

void check_config(const SamplerConfig& config) {
    if (config.n < 0) throw ArgumentError("sampler: n must be >= 0");
    if (config.reps < 1) throw ArgumentError("sampler: reps must be >= 1");
    if (!has_direct_sampler(config.pattern)) throw_unsupported(config.pattern);
}

} // namespace

int draw_split_position(int m, Rng& rng) {
    if (m < 1) throw ArgumentError("draw_split_position: m must be >= 1");
    if (m == 1) return 1;
    if (m > kExactSplitRange) return draw_split_float(m, rng);
    const auto& tables = SplitTables::get();
    if (!tables.word[m].empty()) {
        const auto& cum = tables.word[m];
        const std::uint64_t r = rng.below(cum.back());
        return static_cast<int>(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin()) + 1;
    }
    const auto& cum = tables.big[m];
    const mpz_class r = rng.below(cum.back());
    return static_cast<int>(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin()) + 1;
}

void sample_231_into(int n, Rng& rng, std::vector<int>& out) {
    if (n < 0) throw ArgumentError("sample_231: n must be >= 0");
    out.assign(n, 0);
    struct Block {
        int pos, len, value_lo;
    };
    std::vector<Block> stack{{0, n, 1}};
    while (!stack.empty()) {
        const Block b = stack.back();
        stack.pop_back();
        if (b.len == 0) continue;
        if (b.len == 1) {
            out[b.pos] = b.value_lo;
            continue;
        }
        const int j = draw_split_position(b.len, rng);
        out[b.pos + j - 1] = b.value_lo + b.len - 1;
        stack.push_back({b.pos + j, b.len - j, b.value_lo + j - 1});
        stack.push_back({b.pos, j - 1, b.value_lo});
    }
}

Permutation sample_231(int n, Rng& rng) {
    std::vector<int> v;
    sample_231_into(n, rng, v);
    return Permutation(std::move(v));
}

bool has_direct_sampler(PatternId pattern) {
    return pattern == PatternId::P231 || pattern == PatternId::P132 || pattern == PatternId::P213 ||
           pattern == PatternId::P312;
}

void sample_avoider_into(PatternId pattern, int n, Rng& rng, std::vector<int>& out) {
    if (!has_direct_sampler(pattern)) throw_unsupported(pattern);
    sample_231_into(n, rng, out);
    apply_symmetry(pattern, out);
}

Permutation sample_avoider(const SamplerConfig& config, Rng& rng) {
    check_config(config);
    std::vector<int> v;
    sample_avoider_into(config.pattern, config.n, rng, v);
    return Permutation(std::move(v));
}

void for_each_sample(const SamplerConfig& config, const std::function<void(long long, std::span<const int>)>& visit) {
    check_config(config);
    std::vector<int> buf;
    for (long long r = 0; r < config.reps; ++r) {
        Rng rng = Rng::for_replicate(config.seed, static_cast<std::uint64_t>(r));
        sample_avoider_into(config.pattern, config.n, rng, buf);
        visit(r, buf);
    }
}

std::vector<std::uint64_t> statistic_histogram(const SamplerConfig& config, StatisticId stat, int workers) {
    check_config(config);
    if (workers < 1) throw ArgumentError("statistic_histogram: workers must be >= 1");
    workers = static_cast<int>(std::min<long long>(workers, config.reps));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(config.n + 1, 0));

    auto run = [&](int w) {
        std::vector<int> buf;
        auto& hist = partial[w];
        for (long long r = w; r < config.reps; r += workers) {
            Rng rng = Rng::for_replicate(config.seed, static_cast<std::uint64_t>(r));
            sample_avoider_into(config.pattern, config.n, rng, buf);
            ++hist[evaluate(stat, buf)];
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }
    std::vector<std::uint64_t> total(config.n + 1, 0);
    for (const auto& h : partial)
        for (std::size_t k = 0; k < h.size(); ++k) total[k] += h[k];
    return total;
}

TailEstimate estimate_tail(const SamplerConfig& config, StatisticId stat, double x, Side side, int workers) {
    if (config.reps < 100) throw ArgumentError("estimate_tail: reps must be >= 100");
    if (!std::isfinite(x) || x <= 0.0 || x > 1.0) throw ArgumentError("estimate_tail: need 0 < x <= 1");
    const auto hist = statistic_histogram(config, stat, workers);
    long long hits = 0;
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (in_tail(static_cast<int>(k), config.n, x, side)) hits += static_cast<long long>(hist[k]);
    TailEstimate t{};
    t.statistic = stat;
    t.n = config.n;
    t.x = x;
    t.side = side;
    t.reps = config.reps;
    t.hits = hits;
    t.p_hat = static_cast<double>(hits) / static_cast<double>(config.reps);
    t.ci_radius = 1.96 * std::sqrt(t.p_hat * (1.0 - t.p_hat) / static_cast<double>(config.reps));
    t.below_resolution = hits == 0;
    if (hits > 0) {
        if (config.n > 0) t.slope_hat = -std::log(t.p_hat) / config.n;
        t.upper_bound = std::min(1.0, t.p_hat + t.ci_radius);
    } else {
        t.upper_bound = 3.0 / static_cast<double>(config.reps);
    }
    return t;
}

MomentEstimate moments_from_histogram(std::span<const std::uint64_t> histogram, StatisticId stat, int n) {
    // Integer power sums keep the result independent of summation order.
    __extension__ using u128 = unsigned __int128;
    u128 count = 0, s1 = 0, s2 = 0;
    for (std::size_t k = 0; k < histogram.size(); ++k) {
        count += histogram[k];
        s1 += static_cast<u128>(histogram[k]) * k;
        s2 += static_cast<u128>(histogram[k]) * k * k;
    }
    if (count < 2) throw ArgumentError("moments: need at least two replicates");
    const long double c = static_cast<long double>(count);
    const long double mean = static_cast<long double>(s1) / c;
    // sum (k - mean)^2 = s2 - s1^2 / count
    const long double ss = static_cast<long double>(s2) - static_cast<long double>(s1) * mean;
    const long double var = ss / (c - 1);
    return {stat, n, static_cast<long long>(count), static_cast<double>(mean), static_cast<double>(var),
            static_cast<double>(std::sqrt(var / c))};
}

MomentEstimate sample_variance_check(const SamplerConfig& config, StatisticId stat, int workers) {
    if (config.reps < 10000) throw ArgumentError("sample_variance_check: reps must be >= 10000");
    const auto hist = statistic_histogram(config, stat, workers);
    return moments_from_histogram(hist, stat, config.n);
}

ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
    if (observed.size() != probabilities.size()) throw ArgumentError("chi_square_test: size mismatch");
    double total = 0;
    for (auto o : observed) total += static_cast<double>(o);
    if (total <= 0) throw ArgumentError("chi_square_test: no observations");
    double stat = 0.0, pooled_obs = 0.0, pooled_exp = 0.0;
    int cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = probabilities[i] * total;
        const double o = static_cast<double>(observed[i]);
        if (e < 5.0) {
            if (e == 0.0 && o > 0) return {std::numeric_limits<double>::infinity(), 0, 0.0};
            pooled_obs += o;
            pooled_exp += e;
            continue;
        }
        stat += (o - e) * (o - e) / e;
        ++cells;
    }
    if (pooled_exp > 0.0) {
        stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++cells;
    }
    const int dof = cells - 1;
    if (dof < 1) return {stat, 0, 1.0};
    const boost::math::chi_squared dist(dof);
    return {stat, dof, boost::math::cdf(boost::math::complement(dist, stat))};
}

} // namespace patav
