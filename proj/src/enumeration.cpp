#include "patav/enumeration.hpp"

#include "patav/errors.hpp"

#include <array>
#include <string>

namespace patav {

namespace {

class AvoiderWalker {
public:
    AvoiderWalker(int n, PatternId pattern, const std::function<void(std::span<const int>)>& visit)
        : n_(n), visit_(visit), used_(n + 1, false) {
        const auto p = pattern_permutation(pattern);
        for (int t = 0; t < 3; ++t) shape_[t] = p[t];
        prefix_.reserve(n);
    }

    void run() { extend(); }

private:
    // Would appending v complete an occurrence whose last entry is v?
    bool completes_occurrence(int v) const {
        const auto m = prefix_.size();
        for (std::size_t j = 1; j < m; ++j) {
            const int b = prefix_[j];
            if ((b < v) != (shape_[1] < shape_[2])) continue;
            for (std::size_t i = 0; i < j; ++i) {
                const int a = prefix_[i];
                if ((a < b) == (shape_[0] < shape_[1]) && (a < v) == (shape_[0] < shape_[2])) return true;
            }
        }
        return false;
    }

    void extend() {
        if (static_cast<int>(prefix_.size()) == n_) {
            visit_(prefix_);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[v] || completes_occurrence(v)) continue;
            used_[v] = true;
            prefix_.push_back(v);
            extend();
            prefix_.pop_back();
            used_[v] = false;
        }
    }

    int n_;
    const std::function<void(std::span<const int>)>& visit_;
    std::array<int, 3> shape_{};
    std::vector<bool> used_;
    std::vector<int> prefix_;
};

void check_range(int n, const EnumerationLimits& limits) {
    if (n < 0) throw ArgumentError("enumeration: n must be >= 0");
    if (n > limits.max_n)
        throw ResourceLimitError("enumeration: n = " + std::to_string(n) + " exceeds the cap of " +
                                     std::to_string(limits.max_n),
                                 limits.max_n);
}

} // namespace

void for_each_avoider(int n, PatternId pattern, const std::function<void(std::span<const int>)>& visit,
                      EnumerationLimits limits) {
    check_range(n, limits);
    AvoiderWalker(n, pattern, visit).run();
}

AvoiderSet enumerate_avoiders(int n, PatternId pattern, EnumerationLimits limits) {
    AvoiderSet set{n, pattern, {}};
    for_each_avoider(
        n, pattern, [&](std::span<const int> s) { set.members.emplace_back(std::vector<int>(s.begin(), s.end())); },
        limits);
    return set;
}

CountTable brute_distribution(int n, PatternId pattern, StatisticId stat, EnumerationLimits limits) {
    std::vector<unsigned long> tally(n + 1, 0);
    for_each_avoider(n, pattern, [&](std::span<const int> s) { ++tally[evaluate(stat, s)]; }, limits);
    CountTable table{n, stat, pattern, {}};
    table.counts.reserve(tally.size());
    for (unsigned long c : tally) table.counts.emplace_back(c);
    while (table.counts.size() > 1 && table.counts.back() == 0) table.counts.pop_back();
    return table;
}

} // namespace patav
