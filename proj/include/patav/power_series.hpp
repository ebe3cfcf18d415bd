#pragma once

#include "patav/errors.hpp"
#include "patav/family.hpp"
#include "patav/upoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace patav {

inline mpq_class halve(const mpq_class& x) { return x / 2; }
inline UPoly halve(const UPoly& x) { return x * mpq_class(1, 2); }
inline long double halve(long double x) { return x / 2; }

/// Truncated power series a_0 + a_1 t + ... + a_N t^N over a coefficient
/// ring: mpq_class (exact rationals), UPoly (polynomials in u) or
/// long double. Arithmetic is modulo t^{N+1}; binary operations truncate to
/// the smaller order.
template <class Ring>
class PowerSeries {
public:
    PowerSeries() : coeffs_{Ring(0)} {}
    explicit PowerSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw ArgumentError("power series needs at least one coefficient");
    }
    /// `coeffs` padded with zeros (or truncated) to order N.
    static PowerSeries with_order(std::vector<Ring> coeffs, int order) {
        if (order < 0) throw ArgumentError("power series order must be >= 0");
        coeffs.resize(static_cast<std::size_t>(order) + 1, Ring(0));
        return PowerSeries(std::move(coeffs));
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Ring& operator[](std::size_t n) const { return coeffs_[n]; }
    Ring& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(int order) const {
        return with_order(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1),
                          std::min(order, this->order()));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<Ring> out(n + 1);
        for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
        return PowerSeries(std::move(out));
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<Ring> out(n + 1);
        for (int k = 0; k <= n; ++k) out[k] = a[k] - b[k];
        return PowerSeries(std::move(out));
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return series_mul(a, b); }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    /// Cauchy product truncated at the smaller order.
    friend PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<Ring> out(n + 1, Ring(0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
        return PowerSeries(std::move(out));
    }

private:
    std::vector<Ring> coeffs_;
};

/// The unique s with s^2 = p (mod t^{N+1}) and s_0 = 1, from
/// s_n = (p_n - sum_{k=1}^{n-1} s_k s_{n-k}) / 2.
template <class Ring>
PowerSeries<Ring> sqrt_series(const PowerSeries<Ring>& p) {
    if (!(p[0] == Ring(1))) throw ArgumentError("sqrt_series: constant term must equal 1");
    const int n_max = p.order();
    std::vector<Ring> s(n_max + 1, Ring(0));
    s[0] = Ring(1);
    for (int n = 1; n <= n_max; ++n) {
        // Symmetric convolution: pairs (k, n-k) with 1 <= k < n-k once, doubled.
        Ring cross(0);
        for (int k = 1; k < n - k; ++k) cross += s[k] * s[n - k];
        cross += cross;
        if (n % 2 == 0 && n / 2 >= 1) cross += s[n / 2] * s[n / 2];
        s[n] = halve(p[n] - cross);
    }
    return PowerSeries<Ring>(std::move(s));
}

/// The quadratic under the square root of the closed-form generating
/// function, padded to order N:
///   alt: 4(1 - u^2) t^2 - 4t + 1
///   inc: (u - 1)^2 t^2 - 2(u + 1) t + 1
PowerSeries<UPoly> family_quadratic(Family family, int order);
PowerSeries<long double> family_quadratic_at(Family family, double lambda, int order);

/// Coefficients of G(t) = sum_n C_n M_n(lambda) t^n through t^N, from the
/// closed forms
///   alt: (1 - 2(1 - u) t - sqrt(4(1 - u^2) t^2 - 4t + 1)) / (2 u t)
///   inc: (1 - (u - 1) t - sqrt((u - 1)^2 t^2 - 2(u + 1) t + 1)) / (2 t)
/// The division by t (and by u) is checked to be exact.
PowerSeries<UPoly> expand_G_alt(int order);
PowerSeries<UPoly> expand_G_inc(int order);
PowerSeries<long double> expand_G_alt_at(int order, double lambda);
PowerSeries<long double> expand_G_inc_at(int order, double lambda);
PowerSeries<UPoly> expand_G(Family family, int order);
PowerSeries<long double> expand_G_at(Family family, int order, double lambda);

/// Roots of the family quadratic at u = e^lambda. r1 is the root nearest
/// the origin and fixes the radius of convergence. At lambda = 0 both
/// quadratics reduce to 1 - 4t: r1 = 1/4 and r2 is reported as +infinity.
struct QuadraticRootPair {
    double r1;
    double r2;
    double lambda;
    Family family;
    bool degenerate;
    double radius() const { return r1 < 0 ? -r1 : r1; }
};

QuadraticRootPair quadratic_roots(Family family, double lambda);

enum class GrowthMethod {
    Ratio,         // |a_{n+1} / a_n|, bias O(1/n)
    Extrapolated,  // n rho_n - (n - 1) rho_{n-1}, removes the 1/n term
};

/// Estimate of lim |a_n|^{1/n}: median over the last quartile of indices of
/// the per-index ratio estimates. Needs at least 16 coefficients.
double growth_rate(std::span<const long double> coeffs, GrowthMethod method = GrowthMethod::Extrapolated);

} // namespace patav
