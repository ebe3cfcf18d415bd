#pragma once

#include "patav/count_table.hpp"
#include "patav/exact_distribution.hpp"
#include "patav/family.hpp"

#include <optional>
#include <string>

namespace patav {

/// Scaled cumulant limit Lambda(lambda) = lim (1/n) log M_n(lambda):
///   alt: log(e^lambda + 1) - log 2
///   inc: 2 log(e^{lambda/2} + 1) - log 4
double scgf_alt(double lambda);
double scgf_inc(double lambda);
double scgf(Family family, double lambda);

/// x log x + (1 - x) log(1 - x) + log 2 on (0, 1), extended continuously
/// to log 2 at the endpoints. Throws outside [0, 1].
double i_alt(double x);
/// 2 i_alt(x) on (0, 1); log 4 at x = 1.
double i_inc(double x);
double rate(Family family, double x);

/// Stationary point of lambda x - Lambda(lambda):
///   alt: log(x / (1 - x)), inc: 2 log(x / (1 - x)).
double lambda_star(Family family, double x);

struct LftResult {
    double value;               // closed-form stationary point evaluation
    double lambda_star;         // closed-form maximizer
    double search_value;        // golden-section supremum
    double search_lambda_star;  // golden-section maximizer
};

inline constexpr double kLftBracket = 40.0;
inline constexpr int kLftIterations = 200;

/// sup_lambda (lambda x - Lambda(lambda)) computed twice: at the closed-form
/// stationary point, and by golden-section search on [-40, 40]. Requires
/// 0 < x < 1. Throws SaturationError (carrying the endpoint rate) when the
/// maximizer falls outside the bracket.
LftResult lft_numeric(Family family, double x);

/// Relative entropy against the symmetric law:
///   alt: H(Bernoulli(x) | Bernoulli(1/2))
///   inc: H(nu_x | nu_{1/2}), nu_p the law of half the sum of two
///        independent Bernoulli(p) variables.
double relative_entropy_form(Family family, double x);

Family family_of(StatisticId stat);

struct LdpReport {
    Family family;
    StatisticId statistic;
    double x;
    int n;
    Side side;
    double log_tail;     // log P(stat `side` n x)
    double exact_slope;  // -(1/n) log_tail; +inf for an empty tail
    double closed_form;  // I(x)
    double gap;          // |exact_slope - closed_form|
    std::optional<std::string> diagnostic;
};

/// Compares the finite-n tail exponent with the rate function.
LdpReport ldp_slope_exact(const CountTable& table, double x, Side side);
LdpReport ldp_slope_exact(const LogFloatTable& table, double x, Side side);

} // namespace patav
