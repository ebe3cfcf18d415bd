#include "patav/catalan.hpp"

#include "patav/errors.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

namespace patav {

double log_of(const mpz_class& x) {
    if (sgn(x) <= 0) throw ArgumentError("log_of: non-positive argument");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_of(const mpq_class& x) { return log_of(mpz_class(x.get_num())) - log_of(mpz_class(x.get_den())); }

CatalanCache& CatalanCache::global() {
    static CatalanCache cache;
    return cache;
}

void CatalanCache::grow_to(int n) {
    std::unique_lock lock(mutex_);
    while (static_cast<int>(exact_.size()) <= n) {
        const long m = static_cast<long>(exact_.size()) - 1;  // have C_m, build C_{m+1}
        // C_{m+1} = C_m * 2(2m+1) / (m+2)
        mpz_class next = exact_.back() * (2 * (2 * m + 1));
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(m + 2));
        logs_.push_back(log_of(next));
        exact_.push_back(std::move(next));
    }
}

const mpz_class& CatalanCache::exact(int n) {
    if (n < 0) throw ArgumentError("catalan: n must be >= 0, got " + std::to_string(n));
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<int>(exact_.size())) return exact_[n];
    }
    grow_to(n);
    std::shared_lock lock(mutex_);
    return exact_[n];
}

double CatalanCache::log(int n) {
    exact(n);
    std::shared_lock lock(mutex_);
    return logs_[n];
}

const mpz_class& catalan(int n) { return CatalanCache::global().exact(n); }

double log_catalan(int n) {
    if (n < 0) throw ArgumentError("log_catalan: n must be >= 0");
    if (n <= kExactLogRange) return CatalanCache::global().log(n);
    const double m = n;
    return std::lgamma(2 * m + 1) - 2 * std::lgamma(m + 1) - std::log(m + 1);
}

CatalanAsymptotic catalan_asymptotic(int n) {
    if (n < 1) throw ArgumentError("catalan_asymptotic: n must be >= 1");
    const double m = n;
    const double lv = m * std::log(4.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(m);
    CatalanAsymptotic out{lv, std::nullopt};
    if (lv < std::log(std::numeric_limits<double>::max())) out.value = std::exp(lv);
    return out;
}

mpq_class split_probability(int j, int n) {
    if (n < 1 || j < 1 || j > n)
        throw ArgumentError("split_probability: need 1 <= j <= n, got j=" + std::to_string(j) +
                            " n=" + std::to_string(n));
    mpq_class p(catalan(j - 1) * catalan(n - j), catalan(n));
    p.canonicalize();
    return p;
}

double split_probability_double(int j, int n) {
    if (n < 1 || j < 1 || j > n) throw ArgumentError("split_probability: need 1 <= j <= n");
    return std::exp(log_catalan(j - 1) + log_catalan(n - j) - log_catalan(n));
}

} // namespace patav
