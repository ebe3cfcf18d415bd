#include "patav/power_series.hpp"

#include <cmath>
#include <limits>

namespace patav {

namespace {

void check_order(int order) {
    if (order < 0) throw ArgumentError("series order must be >= 0");
}

void check_lambda(double lambda) {
    if (!std::isfinite(lambda)) throw ArgumentError("lambda must be finite");
}

// Shifts the numerator down by one power of t after checking that its
// constant term cancels.
template <class Ring>
std::vector<Ring> divide_by_t(const std::vector<Ring>& numerator) {
    if (!(numerator[0] == Ring(0)))
        throw InternalConsistencyError("generating function numerator has a nonzero constant term");
    return std::vector<Ring>(numerator.begin() + 1, numerator.end());
}

} // namespace

PowerSeries<UPoly> family_quadratic(Family family, int order) {
    check_order(order);
    const UPoly u = UPoly::u();
    if (family == Family::Alt) return PowerSeries<UPoly>::with_order({UPoly(1), UPoly(-4), (UPoly(1) - u * u) * 4}, order);
    const UPoly um1 = u - UPoly(1);
    return PowerSeries<UPoly>::with_order({UPoly(1), (u + UPoly(1)) * -2, um1 * um1}, order);
}

PowerSeries<long double> family_quadratic_at(Family family, double lambda, int order) {
    check_order(order);
    check_lambda(lambda);
    const long double u = std::exp(static_cast<long double>(lambda));
    if (family == Family::Alt)
        return PowerSeries<long double>::with_order({1.0L, -4.0L, 4.0L * (1.0L - u * u)}, order);
    const long double em1 = std::expm1(static_cast<long double>(lambda));
    return PowerSeries<long double>::with_order({1.0L, -2.0L * (u + 1.0L), em1 * em1}, order);
}

PowerSeries<UPoly> expand_G_alt(int order) {
    check_order(order);
    const auto root = sqrt_series(family_quadratic(Family::Alt, order + 1));
    const UPoly u = UPoly::u();
    std::vector<UPoly> num(order + 2);
    for (int k = 0; k <= order + 1; ++k) num[k] = -root[k];
    num[0] += UPoly(1);
    num[1] += (UPoly(1) - u) * -2;
    auto shifted = divide_by_t(num);
    for (auto& c : shifted) c = halve(c.divide_by_u());
    return PowerSeries<UPoly>(std::move(shifted));
}

PowerSeries<UPoly> expand_G_inc(int order) {
    check_order(order);
    const auto root = sqrt_series(family_quadratic(Family::Inc, order + 1));
    const UPoly u = UPoly::u();
    std::vector<UPoly> num(order + 2);
    for (int k = 0; k <= order + 1; ++k) num[k] = -root[k];
    num[0] += UPoly(1);
    num[1] -= u - UPoly(1);
    auto shifted = divide_by_t(num);
    for (auto& c : shifted) c = halve(c);
    return PowerSeries<UPoly>(std::move(shifted));
}

PowerSeries<long double> expand_G_alt_at(int order, double lambda) {
    const auto root = sqrt_series(family_quadratic_at(Family::Alt, lambda, order + 1));
    const long double u = std::exp(static_cast<long double>(lambda));
    std::vector<long double> num(order + 2);
    for (int k = 0; k <= order + 1; ++k) num[k] = -root[k];
    num[0] += 1.0L;
    num[1] += -2.0L * (1.0L - u);
    auto shifted = divide_by_t(num);
    for (auto& c : shifted) c /= 2.0L * u;
    return PowerSeries<long double>(std::move(shifted));
}

PowerSeries<long double> expand_G_inc_at(int order, double lambda) {
    const auto root = sqrt_series(family_quadratic_at(Family::Inc, lambda, order + 1));
    const long double em1 = std::expm1(static_cast<long double>(lambda));
    std::vector<long double> num(order + 2);
    for (int k = 0; k <= order + 1; ++k) num[k] = -root[k];
    num[0] += 1.0L;
    num[1] -= em1;
    auto shifted = divide_by_t(num);
    for (auto& c : shifted) c /= 2.0L;
    return PowerSeries<long double>(std::move(shifted));
}

PowerSeries<UPoly> expand_G(Family family, int order) {
    return family == Family::Alt ? expand_G_alt(order) : expand_G_inc(order);
}

PowerSeries<long double> expand_G_at(Family family, int order, double lambda) {
    return family == Family::Alt ? expand_G_alt_at(order, lambda) : expand_G_inc_at(order, lambda);
}

QuadraticRootPair quadratic_roots(Family family, double lambda) {
    check_lambda(lambda);
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (lambda == 0.0) return {0.25, inf, lambda, family, true};
    const double u = std::exp(lambda);
    if (family == Family::Alt) {
        // (1 -+ u) / (2(1 - u^2)) after cancelling the common factor.
        return {1.0 / (2.0 * (1.0 + u)), 1.0 / (2.0 * (1.0 - u)), lambda, family, false};
    }
    // (e^{lambda/2} -+ 1)^2 / (e^lambda - 1)^2 = 1 / (e^{lambda/2} +- 1)^2
    const double h = std::exp(lambda / 2.0);
    const double hm1 = std::expm1(lambda / 2.0);
    return {1.0 / ((h + 1.0) * (h + 1.0)), 1.0 / (hm1 * hm1), lambda, family, false};
}

double growth_rate(std::span<const long double> coeffs, GrowthMethod method) {
    const std::size_t n = coeffs.size();
    if (n < 16) throw ArgumentError("growth_rate: need at least 16 coefficients, got " + std::to_string(n));
    const std::size_t first = (3 * n) / 4;
    std::vector<double> estimates;
    for (std::size_t i = std::max<std::size_t>(first, 2); i + 1 < n; ++i) {
        const long double a0 = std::fabs(coeffs[i - 1]), a1 = std::fabs(coeffs[i]), a2 = std::fabs(coeffs[i + 1]);
        if (a1 == 0) continue;
        const long double rho = a2 / a1;
        if (method == GrowthMethod::Ratio) {
            estimates.push_back(static_cast<double>(rho));
        } else {
            if (a0 == 0) continue;
            const long double prev = a1 / a0;
            const long double k = static_cast<long double>(i);
            estimates.push_back(static_cast<double>(k * rho - (k - 1) * prev));
        }
    }
    if (estimates.empty()) throw UndefinedGrowthError("growth_rate: coefficient tail is zero");
    const auto mid = estimates.begin() + static_cast<std::ptrdiff_t>(estimates.size() / 2);
    std::nth_element(estimates.begin(), mid, estimates.end());
    if (estimates.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(estimates.begin(), mid);
    return 0.5 * (lower + upper);
}

} // namespace patav
