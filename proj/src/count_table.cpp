#include "patav/count_table.hpp"

#include "patav/catalan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace patav {

mpz_class CountTable::total() const {
    mpz_class sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

mpz_class CountTable::count(int k) const {
    if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
    return counts[k];
}

std::vector<int> CountTable::support() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (sgn(counts[k]) != 0) out.push_back(static_cast<int>(k));
    return out;
}

double log_sum_exp(std::span<const double> xs) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double x : xs) peak = std::max(peak, x);
    if (!std::isfinite(peak)) return peak;
    double sum = 0.0;
    for (double x : xs)
        if (x != -std::numeric_limits<double>::infinity()) sum += std::exp(x - peak);
    return peak + std::log(sum);
}

double LogFloatTable::log_total() const { return log_sum_exp(log_counts); }

std::vector<int> LogFloatTable::support() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < log_counts.size(); ++k)
        if (log_counts[k] != -std::numeric_limits<double>::infinity()) out.push_back(static_cast<int>(k));
    return out;
}

LogFloatTable to_log_table(const CountTable& table) {
    LogFloatTable out{table.n, table.statistic, table.pattern, {}};
    out.log_counts.reserve(table.counts.size());
    for (const auto& c : table.counts)
        out.log_counts.push_back(sgn(c) == 0 ? -std::numeric_limits<double>::infinity() : log_of(c));
    return out;
}

} // namespace patav
