#include "patav/rate_functions.hpp"

#include "patav/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace patav {

namespace {

constexpr double kLog2 = std::numbers::ln2;
constexpr double kLog4 = 2 * std::numbers::ln2;

// log(1 + e^z) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

void check_unit_closed(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("rate function: x must lie in [0, 1], got " + std::to_string(x));
}

void check_unit_open(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0)) throw ArgumentError(std::string(what) + ": x must lie in (0, 1), got " + std::to_string(x));
}

LdpReport make_report(StatisticId stat, int n, double x, Side side, double log_tail) {
    if (n < 1) throw ArgumentError("ldp_slope_exact: n must be >= 1");
    const Family family = family_of(stat);
    if (x == 1.0 && !(stat == StatisticId::Lis && (side == Side::Ge)))
        throw ArgumentError("ldp_slope_exact: x = 1 is only defined for the lis upper tail");
    LdpReport r{family, stat, x, n, side, log_tail, 0.0, rate(family, x), 0.0, std::nullopt};
    if (log_tail == -std::numeric_limits<double>::infinity()) {
        r.exact_slope = std::numeric_limits<double>::infinity();
        r.gap = std::numeric_limits<double>::infinity();
        r.diagnostic = "empty tail: no value of the statistic lies on this side of n*x";
    } else {
        r.exact_slope = -log_tail / n;
        r.gap = std::fabs(r.exact_slope - r.closed_form);
    }
    return r;
}

} // namespace

double scgf_alt(double lambda) { return softplus(lambda) - kLog2; }
double scgf_inc(double lambda) { return 2.0 * softplus(lambda / 2.0) - kLog4; }
double scgf(Family family, double lambda) { return family == Family::Alt ? scgf_alt(lambda) : scgf_inc(lambda); }

double i_alt(double x) {
    check_unit_closed(x);
    return xlogx(x) + xlogx(1.0 - x) + kLog2;
}

double i_inc(double x) {
    check_unit_closed(x);
    if (x == 1.0) return kLog4;
    return 2.0 * i_alt(x);
}

double rate(Family family, double x) { return family == Family::Alt ? i_alt(x) : i_inc(x); }

double lambda_star(Family family, double x) {
    check_unit_open(x, "lambda_star");
    const double logit = std::log(x) - std::log1p(-x);
    return family == Family::Alt ? logit : 2.0 * logit;
}

LftResult lft_numeric(Family family, double x) {
    check_unit_open(x, "lft_numeric");
    auto objective = [&](double lambda) { return lambda * x - scgf(family, lambda); };

    const double ls = lambda_star(family, x);
    if (std::fabs(ls) > kLftBracket)
        throw SaturationError("lft_numeric: maximizer " + std::to_string(ls) + " leaves the search bracket",
                              rate(family, x < 0.5 ? 0.0 : 1.0));

    // Golden-section search for the maximum of a concave function.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = -kLftBracket, hi = kLftBracket;
    double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
    double fc = objective(c), fd = objective(d);
    for (int it = 0; it < kLftIterations && hi - lo > 0; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = objective(d);
        }
    }
    const double search_lambda = 0.5 * (lo + hi);
    return {objective(ls), ls, objective(search_lambda), search_lambda};
}

double relative_entropy_form(Family family, double x) {
    check_unit_open(x, "relative_entropy_form");
    if (family == Family::Alt) return x * std::log(2.0 * x) + (1.0 - x) * std::log(2.0 * (1.0 - x));
    // nu_p puts mass (1-p)^2, 2p(1-p), p^2 on {0, 1/2, 1}; nu_{1/2} is (1/4, 1/2, 1/4).
    const double q = 1.0 - x;
    return q * q * std::log(4.0 * q * q) + 2.0 * x * q * std::log(4.0 * x * q) + x * x * std::log(4.0 * x * x);
}

Family family_of(StatisticId stat) { return stat == StatisticId::Lis ? Family::Inc : Family::Alt; }

LdpReport ldp_slope_exact(const CountTable& table, double x, Side side) {
    return make_report(table.statistic, table.n, x, side, log_tail_probability(table, x, side));
}

LdpReport ldp_slope_exact(const LogFloatTable& table, double x, Side side) {
    return make_report(table.statistic, table.n, x, side, log_tail_probability(table, x, side));
}

} // namespace patav
