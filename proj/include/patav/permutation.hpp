#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

/// A permutation of {1, ..., n} in one-line notation. n = 0 is allowed.
///
/// Values are validated on construction and immutable afterwards.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    static Permutation identity(int n);

    /// Parses comma-separated one-line notation, e.g. "2,3,1". The empty
    /// string is the empty permutation. A run of single digits without
    /// commas ("231") is accepted as shorthand when n <= 9.
    static Permutation parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }

    /// Comma-separated one-line notation.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

    std::vector<int> values_;

    friend Permutation reverse(const Permutation&);
    friend Permutation complement(const Permutation&);
    friend Permutation reverse_complement(const Permutation&);
};

/// The six patterns of length three.
enum class PatternId { P123, P132, P213, P231, P312, P321 };

inline constexpr PatternId kAllPatterns[] = {PatternId::P123, PatternId::P132, PatternId::P213,
                                             PatternId::P231, PatternId::P312, PatternId::P321};

Permutation pattern_permutation(PatternId id);
std::string to_string(PatternId id);
PatternId parse_pattern(std::string_view text);

enum class StatisticId {
    Alt,    // longest alternating subsequence, either initial direction
    AltPM,  // longest alternating subsequence starting with an ascent, ending with a descent
    Lis,    // longest increasing subsequence
};

std::string to_string(StatisticId id);
StatisticId parse_statistic(std::string_view text);

/// True iff some subsequence of `perm` is order-isomorphic to `pattern`.
/// A pattern longer than `perm` is never contained.
bool contains_pattern(const Permutation& perm, const Permutation& pattern);
bool contains_pattern(const Permutation& perm, PatternId pattern);
inline bool avoids(const Permutation& perm, PatternId pattern) { return !contains_pattern(perm, pattern); }

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);
Permutation reverse_complement(const Permutation& perm);

/// Longest alternating subsequence. 0 for n = 0, 1 for n = 1. O(n).
int stat_alt(std::span<const int> values);
/// Longest subsequence of shape a1 < a2 > a3 < ... > a_{2k+1}; 1 when none
/// exists, 0 for n = 0. O(n^2).
int stat_alt_pm(std::span<const int> values);
/// Longest strictly increasing subsequence. O(n log n).
int stat_lis(std::span<const int> values);

inline int stat_alt(const Permutation& p) { return stat_alt(p.values()); }
inline int stat_alt_pm(const Permutation& p) { return stat_alt_pm(p.values()); }
inline int stat_lis(const Permutation& p) { return stat_lis(p.values()); }

int evaluate(StatisticId stat, std::span<const int> values);
inline int evaluate(StatisticId stat, const Permutation& p) { return evaluate(stat, p.values()); }

} // namespace patav
