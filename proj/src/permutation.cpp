#include "patav/permutation.hpp"

#include "patav/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace patav {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
            throw ArgumentError("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
    if (n < 0) throw ArgumentError("identity: negative length");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    if (text.empty()) return Permutation();
    if (text.find(',') == std::string_view::npos && text.size() > 1) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ArgumentError("malformed permutation: " + std::string(text));
            values.push_back(c - '0');
        }
        return Permutation(std::move(values));
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
            throw ArgumentError("malformed permutation: " + std::string(text));
        values.push_back(v);
        pos = end + 1;
    }
    return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation pattern_permutation(PatternId id) {
    switch (id) {
    case PatternId::P123: return {1, 2, 3};
    case PatternId::P132: return {1, 3, 2};
    case PatternId::P213: return {2, 1, 3};
    case PatternId::P231: return {2, 3, 1};
    case PatternId::P312: return {3, 1, 2};
    case PatternId::P321: return {3, 2, 1};
    }
    throw ArgumentError("unknown pattern");
}

std::string to_string(PatternId id) {
    switch (id) {
    case PatternId::P123: return "123";
    case PatternId::P132: return "132";
    case PatternId::P213: return "213";
    case PatternId::P231: return "231";
    case PatternId::P312: return "312";
    case PatternId::P321: return "321";
    }
    return "?";
}

PatternId parse_pattern(std::string_view text) {
    for (PatternId id : kAllPatterns)
        if (to_string(id) == text) return id;
    throw ArgumentError("unknown pattern '" + std::string(text) + "' (expected one of 123,132,213,231,312,321)");
}

std::string to_string(StatisticId id) {
    switch (id) {
    case StatisticId::Alt: return "alt";
    case StatisticId::AltPM: return "altpm";
    case StatisticId::Lis: return "lis";
    }
    return "?";
}

StatisticId parse_statistic(std::string_view text) {
    if (text == "alt") return StatisticId::Alt;
    if (text == "altpm") return StatisticId::AltPM;
    if (text == "lis") return StatisticId::Lis;
    throw ArgumentError("unknown statistic '" + std::string(text) + "' (expected alt, altpm or lis)");
}

namespace {

// Patterns whose first entry is the smallest (1xx) or largest (3xx) value:
// an occurrence exists iff some pair j < k has the right relative order and
// the prefix extremum before j lies on the correct side of both.
bool contains_3_pattern_scan(std::span<const int> s, PatternId id) {
    const auto n = s.size();
    int prefix_min = std::numeric_limits<int>::max();
    int prefix_max = std::numeric_limits<int>::min();
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const int a = s[j], b = s[k];
                switch (id) {
                case PatternId::P123:
                    if (a < b && prefix_min < a) return true;
                    break;
                case PatternId::P132:
                    if (b < a && prefix_min < b) return true;
                    break;
                case PatternId::P312:
                    if (a < b && prefix_max > b) return true;
                    break;
                case PatternId::P321:
                    if (b < a && prefix_max > a) return true;
                    break;
                default:
                    throw InternalConsistencyError("scan called for 2xx pattern");
                }
            }
        }
        prefix_min = std::min(prefix_min, s[j]);
        prefix_max = std::max(prefix_max, s[j]);
    }
    return false;
}

bool extend_occurrence(std::span<const int> s, std::span<const int> pattern, std::vector<std::size_t>& chosen,
                       std::size_t start) {
    const auto depth = chosen.size();
    if (depth == pattern.size()) return true;
    const auto remaining = pattern.size() - depth;
    for (std::size_t i = start; i + remaining <= s.size(); ++i) {
        bool ok = true;
        for (std::size_t t = 0; t < depth && ok; ++t)
            ok = (s[chosen[t]] < s[i]) == (pattern[t] < pattern[depth]);
        if (!ok) continue;
        chosen.push_back(i);
        if (extend_occurrence(s, pattern, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& perm, PatternId pattern) {
    switch (pattern) {
    case PatternId::P213: return contains_3_pattern_scan(reverse(perm).values(), PatternId::P312);
    case PatternId::P231: return contains_3_pattern_scan(reverse(perm).values(), PatternId::P132);
    default: return contains_3_pattern_scan(perm.values(), pattern);
    }
}

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
    if (pattern.size() > perm.size()) return false;
    if (pattern.size() == 3) {
        for (PatternId id : kAllPatterns)
            if (pattern_permutation(id) == pattern) return contains_pattern(perm, id);
    }
    std::vector<std::size_t> chosen;
    chosen.reserve(pattern.size());
    return extend_occurrence(perm.values(), pattern.values(), chosen, 0);
}

Permutation reverse(const Permutation& perm) {
    std::vector<int> v(perm.values_.rbegin(), perm.values_.rend());
    return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation complement(const Permutation& perm) {
    const int n1 = static_cast<int>(perm.size()) + 1;
    std::vector<int> v(perm.size());
    std::transform(perm.values_.begin(), perm.values_.end(), v.begin(), [n1](int x) { return n1 - x; });
    return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation reverse_complement(const Permutation& perm) {
    const int n1 = static_cast<int>(perm.size()) + 1;
    std::vector<int> v(perm.values_.rbegin(), perm.values_.rend());
    for (int& x : v) x = n1 - x;
    return Permutation(std::move(v), Permutation::Unchecked{});
}

int stat_alt(std::span<const int> s) {
    const auto n = s.size();
    if (n <= 1) return static_cast<int>(n);
    // Number of maximal monotone runs, plus one.
    int runs = 1;
    for (std::size_t i = 2; i < n; ++i) {
        const bool up_prev = s[i - 1] > s[i - 2];
        const bool up_here = s[i] > s[i - 1];
        if (up_prev != up_here) ++runs;
    }
    return runs + 1;
}

int stat_alt_pm(std::span<const int> s) {
    const auto n = s.size();
    if (n == 0) return 0;
    // ends_up[i]: longest ascent-first alternating subsequence ending at i with
    // a final ascent (even length). ends_down[i]: same with a final descent
    // (odd length >= 3). Zero means no such subsequence.
    std::vector<int> ends_up(n, 0), ends_down(n, 0);
    int best = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t h = 0; h < i; ++h) {
            if (s[h] < s[i]) {
                ends_up[i] = std::max(ends_up[i], std::max(2, ends_down[h] ? ends_down[h] + 1 : 0));
            } else if (ends_up[h]) {
                ends_down[i] = std::max(ends_down[i], ends_up[h] + 1);
            }
        }
        best = std::max(best, ends_down[i]);
    }
    return best;
}

int stat_lis(std::span<const int> s) {
    std::vector<int> tails;
    tails.reserve(s.size());
    for (int v : s) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

int evaluate(StatisticId stat, std::span<const int> values) {
    switch (stat) {
    case StatisticId::Alt: return stat_alt(values);
    case StatisticId::AltPM: return stat_alt_pm(values);
    case StatisticId::Lis: return stat_lis(values);
    }
    throw ArgumentError("unknown statistic");
}

} // namespace patav
