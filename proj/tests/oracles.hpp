#pragma once

// Deliberately naive reference implementations, independent of the library
// code paths they check. Exponential or cubic time; small n only.

#include "patav/permutation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Order-isomorphism test over every index subset of size |pattern|.
inline bool contains(const std::vector<int>& perm, const std::vector<int>& pattern) {
    const int n = static_cast<int>(perm.size()), m = static_cast<int>(pattern.size());
    if (m > n) return false;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool iso = true;
        for (int a = 0; a < m && iso; ++a)
            for (int b = 0; b < m && iso; ++b)
                iso = (perm[idx[a]] < perm[idx[b]]) == (pattern[a] < pattern[b]);
        if (iso) return true;
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<int> digits(int pattern) {
    std::vector<int> d;
    for (; pattern > 0; pattern /= 10) d.insert(d.begin(), pattern % 10);
    return d;
}

// Every subsequence, as a bitmask over positions; masks no longer than the
// best found so far are skipped.
template <class Pred>
int longest_subsequence(const std::vector<int>& perm, Pred accept) {
    const int n = static_cast<int>(perm.size());
    int best = 0;
    int sub[32];
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int len = std::popcount(mask);
        if (len <= best) continue;
        for (int i = 0, j = 0; i < n; ++i)
            if (mask >> i & 1u) sub[j++] = perm[i];
        if (accept(sub, len)) best = len;
    }
    return best;
}

inline bool alternating(const int* s, int len) {
    for (int i = 2; i < len; ++i)
        if ((s[i - 2] < s[i - 1]) == (s[i - 1] < s[i])) return false;
    return true;
}

inline int alt(const std::vector<int>& perm) { return longest_subsequence(perm, alternating); }

inline int alt_pm(const std::vector<int>& perm) {
    if (perm.empty()) return 0;
    const int best = longest_subsequence(perm, [](const int* s, int len) {
        return len >= 3 && s[0] < s[1] && s[len - 2] > s[len - 1] && alternating(s, len);
    });
    return std::max(best, 1);
}

inline int lis(const std::vector<int>& perm) {
    return longest_subsequence(perm, [](const int* s, int len) { return std::is_sorted(s, s + len); });
}

inline mpz_class catalan(unsigned n) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b / (n + 1);
}

// value -> count over S_n filtered by avoidance of `pattern` (e.g. 231).
template <class Stat>
std::map<int, long> distribution(int n, int pattern, Stat stat) {
    std::map<int, long> out;
    for (const auto& p : all_permutations(n))
        if (!contains(p, digits(pattern))) ++out[stat(p)];
    return out;
}

} // namespace oracle
