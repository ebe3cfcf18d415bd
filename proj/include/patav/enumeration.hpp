#pragma once

#include "patav/count_table.hpp"
#include "patav/permutation.hpp"

#include <functional>
#include <span>
#include <vector>

namespace patav {

struct EnumerationLimits {
    int max_n = 12;
};

/// Calls `visit` once for every avoider of `pattern` in S_n, in
/// lexicographic order of one-line notation. The span is only valid during
/// the call. Throws ResourceLimitError above limits.max_n.
void for_each_avoider(int n, PatternId pattern, const std::function<void(std::span<const int>)>& visit,
                      EnumerationLimits limits = {});

struct AvoiderSet {
    int n = 0;
    PatternId pattern = PatternId::P231;
    std::vector<Permutation> members;
};

AvoiderSet enumerate_avoiders(int n, PatternId pattern, EnumerationLimits limits = {});

/// Exact distribution of `stat` over S_n^{av(pattern)} by brute force.
CountTable brute_distribution(int n, PatternId pattern, StatisticId stat, EnumerationLimits limits = {});

} // namespace patav
