#include "patav/exact_distribution.hpp"

#include "patav/catalan.hpp"
#include "patav/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <string>

namespace patav {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

enum class Recurrence { AltPM, Lis };

Recurrence recurrence_for(StatisticId stat) {
    switch (stat) {
    case StatisticId::AltPM: return Recurrence::AltPM;
    case StatisticId::Lis: return Recurrence::Lis;
    case StatisticId::Alt: break;
    }
    throw ArgumentError("no count recurrence for statistic 'alt'; use altpm or lis");
}

void check_size(int n, int cap, const char* mode) {
    if (n < 0) throw ArgumentError("distribution: n must be >= 0, got " + std::to_string(n));
    if (n > cap) {
        std::string msg = std::string(mode) + " mode: n = " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(cap);
        if (std::string(mode) == "exact") msg += "; use logfloat mode for larger n";
        throw ResourceLimitError(msg, cap);
    }
}

// Coefficient arithmetic for the two table kinds. Exact tables hold N_n(k);
// float tables hold N_n(k) / 4^n in extended precision, which keeps every
// entry of every table up to n = 2048 inside the long double range.
struct ExactRing {
    using Coeff = mpz_class;
    static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
    static void add_product(Coeff& acc, const Coeff& x, const Coeff& y) {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    static constexpr int scale = 1;  // growth factor per length step
};

struct ScaledFloatRing {
    using Coeff = long double;
    static bool is_zero(const Coeff& c) { return c == 0; }
    static void add_product(Coeff& acc, const Coeff& x, const Coeff& y) { acc += x * y; }
    static constexpr int scale = 4;
};

// Nonzero coefficients of a table lie on an arithmetic progression: every
// index for lis, the odd indices for altpm. stride 0 marks a single entry.
struct Support {
    std::size_t lo = 0, hi = 0, stride = 0;
    bool empty = true;
};

template <class Ring>
Support support_of(const std::vector<typename Ring::Coeff>& p) {
    Support s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (Ring::is_zero(p[k])) continue;
        if (s.empty) {
            s.lo = k;
            s.empty = false;
        } else {
            s.stride = std::gcd(s.stride, k - s.hi);
        }
        s.hi = k;
    }
    return s;
}

// acc += x * y as a sum of dot products, one per output index, so the inner
// loop accumulates in a register. Entries skipped by the stride are zero;
// when the strides disagree every index in range is visited instead.
template <class Ring>
void accumulate_product(std::vector<typename Ring::Coeff>& acc, const std::vector<typename Ring::Coeff>& x,
                        const Support& xs, const std::vector<typename Ring::Coeff>& y, const Support& ys) {
    if (xs.empty || ys.empty) return;
    std::size_t st = std::max(xs.stride, ys.stride);
    if (xs.stride != 0 && ys.stride != 0 && xs.stride != ys.stride) st = 1;
    if (st == 0) st = 1;
    typename Ring::Coeff dot;
    for (std::size_t k = xs.lo + ys.lo; k <= xs.hi + ys.hi; k += st) {
        std::size_t i = std::max(xs.lo, k - std::min(k, ys.hi));
        const std::size_t i_end = std::min(xs.hi, k - ys.lo);
        i += (st - (i - xs.lo) % st) % st;
        dot = 0;
        for (; i <= i_end; i += st) Ring::add_product(dot, x[i], y[k - i]);
        acc[k] += dot;
    }
}

template <class Ring>
std::vector<std::vector<typename Ring::Coeff>> build_sequence(Recurrence kind, int n) {
    using Coeff = typename Ring::Coeff;
    const Coeff s = Ring::scale;
    std::vector<std::vector<Coeff>> polys;
    std::vector<Support> supports;
    polys.reserve(n + 1);
    supports.reserve(n + 1);

    auto push = [&](std::vector<Coeff> p) {
        while (p.size() > 1 && Ring::is_zero(p.back())) p.pop_back();
        supports.push_back(support_of<Ring>(p));
        polys.push_back(std::move(p));
    };

    push({Coeff(1)});
    if (n >= 1) push({Coeff(0), Coeff(1) / s});
    int start = 2;
    if (kind == Recurrence::AltPM && n >= 2) {
        push({Coeff(0), Coeff(2) / (s * s)});
        start = 3;
    }

    for (int m = start; m <= n; ++m) {
        // Sum over splits a + b = m - 1 with a, b >= 1. The sum is symmetric
        // under a <-> b, so off-diagonal pairs are accumulated once and doubled.
        std::vector<Coeff> pairs(m, Coeff(0));
        for (int a = 1; a < m - 1 - a; ++a)
            accumulate_product<Ring>(pairs, polys[a], supports[a], polys[m - 1 - a], supports[m - 1 - a]);
        for (auto& c : pairs) c *= 2;
        if ((m - 1) % 2 == 0 && (m - 1) / 2 >= 1) {
            const int h = (m - 1) / 2;
            accumulate_product<Ring>(pairs, polys[h], supports[h], polys[h], supports[h]);
        }
        const auto& prev = polys[m - 1];
        std::vector<Coeff> next(m + 1, Coeff(0));
        if (kind == Recurrence::AltPM) {
            // u * pairs + 2 P_{m-1}
            for (std::size_t k = 0; k < pairs.size(); ++k) next[k + 1] += pairs[k];
            for (std::size_t k = 0; k < prev.size(); ++k) next[k] += 2 * prev[k];
        } else {
            // j = 1 term (Q_0 Q_{m-1}) + pairs + u Q_{m-1}
            for (std::size_t k = 0; k < pairs.size(); ++k) next[k] += pairs[k];
            for (std::size_t k = 0; k < prev.size(); ++k) {
                next[k] += prev[k];
                next[k + 1] += prev[k];
            }
        }
        if (s != 1)
            for (auto& c : next) c /= s;
        push(std::move(next));
    }
    return polys;
}

StatisticId statistic_of(Recurrence kind) { return kind == Recurrence::AltPM ? StatisticId::AltPM : StatisticId::Lis; }

std::vector<CountTable> exact_sequence(Recurrence kind, int n, const DistributionLimits& limits) {
    check_size(n, limits.exact_cap, "exact");
    auto polys = build_sequence<ExactRing>(kind, n);
    std::vector<CountTable> out;
    out.reserve(polys.size());
    for (int m = 0; m <= n; ++m) out.push_back(CountTable{m, statistic_of(kind), PatternId::P231, std::move(polys[m])});
    return out;
}

std::vector<LogFloatTable> log_sequence(Recurrence kind, int n, const DistributionLimits& limits) {
    check_size(n, limits.logfloat_cap, "logfloat");
    auto polys = build_sequence<ScaledFloatRing>(kind, n);
    std::vector<LogFloatTable> out;
    out.reserve(polys.size());
    const long double log4 = std::log(4.0L);
    for (int m = 0; m <= n; ++m) {
        LogFloatTable t{m, statistic_of(kind), PatternId::P231, {}};
        t.log_counts.reserve(polys[m].size());
        for (long double c : polys[m])
            t.log_counts.push_back(c == 0 ? kNegInf : static_cast<double>(std::log(c) + m * log4));
        out.push_back(std::move(t));
    }
    return out;
}

void check_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw ArgumentError("lambda must be finite");
}

double tilted_log_total(std::span<const double> log_counts, double lambda) {
    std::vector<double> tilted(log_counts.begin(), log_counts.end());
    for (std::size_t k = 0; k < tilted.size(); ++k)
        if (tilted[k] != kNegInf) tilted[k] += lambda * static_cast<double>(k);
    return log_sum_exp(tilted);
}

void check_threshold(double x) {
    if (!std::isfinite(x) || x <= 0.0 || x > 1.0)
        throw ArgumentError("tail threshold x must satisfy 0 < x <= 1, got " + std::to_string(x));
}

} // namespace

Mode parse_mode(std::string_view text) {
    if (text == "exact") return Mode::Exact;
    if (text == "logfloat") return Mode::LogFloat;
    throw ArgumentError("unknown mode '" + std::string(text) + "' (expected exact or logfloat)");
}

std::vector<CountTable> alt_pm_count_sequence(int n, DistributionLimits limits) {
    return exact_sequence(Recurrence::AltPM, n, limits);
}
std::vector<CountTable> lis_count_sequence(int n, DistributionLimits limits) {
    return exact_sequence(Recurrence::Lis, n, limits);
}
std::vector<LogFloatTable> alt_pm_log_sequence(int n, DistributionLimits limits) {
    return log_sequence(Recurrence::AltPM, n, limits);
}
std::vector<LogFloatTable> lis_log_sequence(int n, DistributionLimits limits) {
    return log_sequence(Recurrence::Lis, n, limits);
}

CountTable alt_pm_counts(int n, DistributionLimits limits) { return std::move(alt_pm_count_sequence(n, limits).back()); }
CountTable lis_counts(int n, DistributionLimits limits) { return std::move(lis_count_sequence(n, limits).back()); }
LogFloatTable alt_pm_log_counts(int n, DistributionLimits limits) {
    return std::move(alt_pm_log_sequence(n, limits).back());
}
LogFloatTable lis_log_counts(int n, DistributionLimits limits) { return std::move(lis_log_sequence(n, limits).back()); }

CountTable recurrence_counts(StatisticId stat, int n, DistributionLimits limits) {
    return std::move(exact_sequence(recurrence_for(stat), n, limits).back());
}
LogFloatTable recurrence_log_counts(StatisticId stat, int n, DistributionLimits limits) {
    return std::move(log_sequence(recurrence_for(stat), n, limits).back());
}
std::vector<LogFloatTable> recurrence_log_sequence(StatisticId stat, int n, DistributionLimits limits) {
    return log_sequence(recurrence_for(stat), n, limits);
}

double log_mgf(const LogFloatTable& table, double lambda) {
    check_lambda(lambda);
    if (table.log_counts.empty()) throw ArgumentError("mgf: empty table");
    return tilted_log_total(table.log_counts, lambda) - table.log_total();
}

double log_mgf(const CountTable& table, double lambda) {
    if (table.counts.empty()) throw ArgumentError("mgf: empty table");
    return log_mgf(to_log_table(table), lambda);
}

double mgf(const CountTable& table, double lambda) { return std::exp(log_mgf(table, lambda)); }
double mgf(const LogFloatTable& table, double lambda) { return std::exp(log_mgf(table, lambda)); }

double scaled_log_mgf(const CountTable& table, double lambda) {
    if (table.n < 1) throw ArgumentError("scaled_log_mgf: n must be >= 1");
    return log_mgf(table, lambda) / table.n;
}
double scaled_log_mgf(const LogFloatTable& table, double lambda) {
    if (table.n < 1) throw ArgumentError("scaled_log_mgf: n must be >= 1");
    return log_mgf(table, lambda) / table.n;
}

double ratio_limit_estimate(const LogFloatTable& current, const LogFloatTable& previous, double lambda) {
    check_lambda(lambda);
    if (current.n != previous.n + 1 || current.statistic != previous.statistic)
        throw ArgumentError("ratio_limit_estimate: tables must be consecutive lengths of one statistic");
    return tilted_log_total(current.log_counts, lambda) - tilted_log_total(previous.log_counts, lambda);
}

double ratio_limit_estimate(StatisticId stat, double lambda, int n, DistributionLimits limits) {
    if (n < 2) throw ArgumentError("ratio_limit_estimate: n must be >= 2");
    check_lambda(lambda);
    const auto seq = recurrence_log_sequence(stat, n, limits);
    return ratio_limit_estimate(seq[n], seq[n - 1], lambda);
}

ExactMoments mean_variance(const CountTable& table) {
    const mpz_class total = table.total();
    if (sgn(total) == 0) throw ArgumentError("mean_variance: empty table");
    mpz_class s1 = 0, s2 = 0;
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        const unsigned long kk = k;
        s1 += table.counts[k] * kk;
        s2 += table.counts[k] * (kk * kk);
    }
    ExactMoments m;
    m.mean = mpq_class(s1, total);
    m.mean.canonicalize();
    mpq_class second(s2, total);
    second.canonicalize();
    m.variance = second - m.mean * m.mean;
    return m;
}

FloatMoments mean_variance(const LogFloatTable& table) {
    const double lt = table.log_total();
    if (!std::isfinite(lt)) throw ArgumentError("mean_variance: empty table");
    double mean = 0.0;
    for (std::size_t k = 0; k < table.log_counts.size(); ++k)
        mean += static_cast<double>(k) * std::exp(table.log_counts[k] - lt);
    double var = 0.0;
    for (std::size_t k = 0; k < table.log_counts.size(); ++k) {
        const double d = static_cast<double>(k) - mean;
        var += d * d * std::exp(table.log_counts[k] - lt);
    }
    return {mean, var};
}

Side parse_side(std::string_view text) {
    if (text == "ge") return Side::Ge;
    if (text == "gt") return Side::Gt;
    if (text == "le") return Side::Le;
    if (text == "lt") return Side::Lt;
    throw ArgumentError("unknown side '" + std::string(text) + "' (expected ge, gt, le or lt)");
}

std::string_view to_string(Side side) {
    switch (side) {
    case Side::Ge: return "ge";
    case Side::Gt: return "gt";
    case Side::Le: return "le";
    case Side::Lt: return "lt";
    }
    return "?";
}

bool in_tail(int k, int n, double x, Side side) {
    const double threshold = static_cast<double>(n) * x;
    const double v = k;
    switch (side) {
    case Side::Ge: return v >= threshold;
    case Side::Gt: return v > threshold;
    case Side::Le: return v <= threshold;
    case Side::Lt: return v < threshold;
    }
    return false;
}

mpq_class tail_probability(const CountTable& table, double x, Side side) {
    check_threshold(x);
    mpz_class hits = 0;
    for (std::size_t k = 0; k < table.counts.size(); ++k)
        if (in_tail(static_cast<int>(k), table.n, x, side)) hits += table.counts[k];
    mpq_class p(hits, table.total());
    p.canonicalize();
    return p;
}

double log_tail_probability(const CountTable& table, double x, Side side) {
    const mpq_class p = tail_probability(table, x, side);
    return sgn(p) == 0 ? kNegInf : log_of(p);
}

double log_tail_probability(const LogFloatTable& table, double x, Side side) {
    check_threshold(x);
    std::vector<double> hits;
    for (std::size_t k = 0; k < table.log_counts.size(); ++k)
        if (in_tail(static_cast<int>(k), table.n, x, side)) hits.push_back(table.log_counts[k]);
    const double lh = log_sum_exp(hits);
    return lh == kNegInf ? kNegInf : lh - table.log_total();
}

} // namespace patav
