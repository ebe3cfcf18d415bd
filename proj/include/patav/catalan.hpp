#pragma once

#include <gmpxx.h>

#include <deque>
#include <optional>
#include <shared_mutex>

namespace patav {

/// Memoized exact Catalan numbers C_0..C_N with their natural logs.
/// Grows on demand; concurrent readers are safe.
class CatalanCache {
public:
    /// C_n = binomial(2n, n) / (n + 1). The reference stays valid for the
    /// life of the cache.
    const mpz_class& exact(int n);
    /// log C_n, from the exact value.
    double log(int n);

    static CatalanCache& global();

private:
    void grow_to(int n);

    std::shared_mutex mutex_;
    std::deque<mpz_class> exact_{mpz_class(1)};
    std::deque<double> logs_{0.0};
};

const mpz_class& catalan(int n);

/// log C_n for any n >= 0. Exact-cache based up to kExactLogRange, log-gamma
/// beyond.
double log_catalan(int n);
inline constexpr int kExactLogRange = 4096;

/// Natural log of an arbitrary-precision positive integer.
double log_of(const mpz_class& x);
double log_of(const mpq_class& x);

struct CatalanAsymptotic {
    double log_value;
    std::optional<double> value;  // empty when exp(log_value) overflows a double
};

/// 4^n / (sqrt(pi) n^{3/2}), n >= 1.
CatalanAsymptotic catalan_asymptotic(int n);

/// Probability C_{j-1} C_{n-j} / C_n that the largest entry of a uniform
/// 231-avoider of length n sits at position j, 1 <= j <= n.
mpq_class split_probability(int j, int n);
double split_probability_double(int j, int n);

} // namespace patav
