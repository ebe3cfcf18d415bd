// patav: command-line front end. CSV goes to stdout with a header row, JSON
// carries a manifest describing the run. Exit codes: 0 success, 1 failed
// verification, 2 usage, 3 value out of range, 4 resource cap exceeded.

#include "patav/acceptance.hpp"
#include "patav/catalan.hpp"
#include "patav/enumeration.hpp"
#include "patav/errors.hpp"
#include "patav/exact_distribution.hpp"
#include "patav/power_series.hpp"
#include "patav/rate_functions.hpp"
#include "patav/sampler.hpp"
#include "patav/table_io.hpp"
#include "patav/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using patav::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kRange = 3, kResource = 4 };

const std::vector<std::string> kPatternNames = {"123", "132", "213", "231", "312", "321"};
const std::vector<std::string> kSideNames = {"ge", "gt", "le", "lt"};
const std::vector<std::string> kFamilyNames = {"alt", "inc"};

std::string format_double(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

struct Options {
    bool timing = false;

    int catalan_n = 0;
    bool catalan_log = false;
    std::string catalan_format = "text";

    std::string dist_pattern = "231";
    std::string dist_stat = "lis";
    int dist_n = 0;
    std::string dist_mode = "exact";
    std::string dist_format = "csv";

    std::string gf_family = "alt";
    int gf_n = 0;
    std::optional<double> gf_lambda;

    std::string rate_family = "alt";
    double rate_x = 0.5;

    std::string ldp_family = "alt";
    double ldp_x = 0.5;
    int ldp_n = 1;
    std::string ldp_side = "ge";
    std::string ldp_mode = "auto";

    std::string sample_pattern = "231";
    int sample_n = 1;
    long long sample_reps = 1000;
    std::uint64_t sample_seed = 0;
    std::string sample_stat = "alt";
    std::optional<double> sample_tail;
    std::string sample_side = "ge";
    int sample_workers = 1;

    std::string verify_level = "quick";
};

// Wraps a payload with the run manifest. Wall time is opt-in so that
// deterministic commands stay byte-identical across reruns.
class Manifest {
public:
    Manifest(std::string command, bool timing) : command_(std::move(command)), timing_(timing) {}

    Json params = Json::object();
    std::optional<std::uint64_t> seed;

    Json wrap(Json payload) const {
        Json m = Json::object();
        m["command"] = command_;
        m["params"] = params;
        if (seed) m["seed"] = *seed;
        m["version"] = patav::kVersion;
        if (timing_)
            m["wall_time_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        Json out = Json::object();
        out["manifest"] = std::move(m);
        for (auto& [k, v] : payload.items()) out[k] = v;
        return out;
    }

private:
    std::string command_;
    bool timing_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_catalan(const Options& o) {
    if (o.catalan_n < 0) throw patav::ArgumentError("catalan: n must be >= 0");
    std::string value = o.catalan_log ? format_double(patav::log_catalan(o.catalan_n)) : patav::catalan(o.catalan_n).get_str();
    if (o.catalan_format == "json") {
        Manifest m("catalan", o.timing);
        m.params["n"] = o.catalan_n;
        m.params["log"] = o.catalan_log;
        Json payload;
        payload["n"] = o.catalan_n;
        if (o.catalan_log) payload["log_value"] = patav::log_catalan(o.catalan_n);
        else payload["value"] = value;
        print_json(m.wrap(payload));
    } else {
        std::cout << value << '\n';
    }
    return kOk;
}

int cmd_dist(const Options& o) {
    const auto pattern = patav::parse_pattern(o.dist_pattern);
    const auto stat = patav::parse_statistic(o.dist_stat);
    Manifest m("dist", o.timing);
    m.params["pattern"] = o.dist_pattern;
    m.params["stat"] = o.dist_stat;
    m.params["n"] = o.dist_n;
    m.params["mode"] = o.dist_mode;

    if (o.dist_mode == "brute") {
        const auto table = patav::brute_distribution(o.dist_n, pattern, stat);
        if (o.dist_format == "csv") std::cout << patav::to_csv(table);
        else print_json(m.wrap(patav::to_json(table)));
        return kOk;
    }

    // The recurrences describe av(231); the LIS law under av(312) coincides.
    const bool supported = stat != patav::StatisticId::Alt &&
                           (pattern == patav::PatternId::P231 ||
                            (pattern == patav::PatternId::P312 && stat == patav::StatisticId::Lis));
    if (!supported)
        throw patav::UnsupportedPatternError("dist: --mode " + o.dist_mode + " covers altpm under 231 and lis under 231 or 312; use --mode brute for other combinations");

    if (o.dist_mode == "exact") {
        auto table = patav::recurrence_counts(stat, o.dist_n);
        table.pattern = pattern;
        if (o.dist_format == "csv") std::cout << patav::to_csv(table);
        else print_json(m.wrap(patav::to_json(table)));
    } else {
        auto table = patav::recurrence_log_counts(stat, o.dist_n);
        table.pattern = pattern;
        if (o.dist_format == "csv") std::cout << patav::to_csv(table);
        else print_json(m.wrap(patav::to_json(table)));
    }
    return kOk;
}

int cmd_gf(const Options& o) {
    if (o.gf_n < 0) throw patav::ArgumentError("gf: n must be >= 0");
    const auto family = patav::parse_family(o.gf_family);
    std::cout << "n,coeff\n";
    if (o.gf_lambda) {
        const auto g = patav::expand_G_at(family, o.gf_n, *o.gf_lambda);
        for (int k = 0; k <= o.gf_n; ++k) std::cout << k << ',' << format_double(g[k]) << '\n';
    } else {
        const auto g = patav::expand_G(family, o.gf_n);
        for (int k = 0; k <= o.gf_n; ++k) std::cout << k << ',' << g[k].to_string() << '\n';
    }
    return kOk;
}

int cmd_rate(const Options& o) {
    const auto family = patav::parse_family(o.rate_family);
    const double x = o.rate_x;
    if (!(x >= 0.0 && x <= 1.0)) throw patav::ArgumentError("rate: x must lie in [0, 1]");
    Manifest m("rate", o.timing);
    m.params["family"] = o.rate_family;
    m.params["x"] = x;

    Json payload;
    payload["family"] = o.rate_family;
    payload["x"] = x;
    payload["closed_form"] = patav::rate(family, x);
    if (x > 0.0 && x < 1.0) {
        payload["lambda_star"] = patav::lambda_star(family, x);
        try {
            const auto lft = patav::lft_numeric(family, x);
            payload["lft"] = {{"value", lft.value},
                              {"lambda_star", lft.lambda_star},
                              {"search_value", lft.search_value},
                              {"search_lambda_star", lft.search_lambda_star}};
        } catch (const patav::SaturationError& e) {
            payload["lft"] = {{"saturated", true}, {"boundary_value", e.boundary_value()}};
        }
        payload["relative_entropy"] = patav::relative_entropy_form(family, x);
    } else {
        // The supremum is approached only as lambda runs off to infinity.
        payload["lambda_star"] = nullptr;
        payload["lft"] = {{"saturated", true}, {"boundary_value", patav::rate(family, x)}};
        payload["relative_entropy"] = nullptr;
    }
    print_json(m.wrap(payload));
    return kOk;
}

int cmd_ldp(const Options& o) {
    const auto family = patav::parse_family(o.ldp_family);
    const auto side = patav::parse_side(o.ldp_side);
    const auto stat = family == patav::Family::Alt ? patav::StatisticId::AltPM : patav::StatisticId::Lis;
    const patav::DistributionLimits limits;
    const bool exact = o.ldp_mode == "exact" || (o.ldp_mode == "auto" && o.ldp_n <= limits.exact_cap);

    const auto report = exact ? patav::ldp_slope_exact(patav::recurrence_counts(stat, o.ldp_n), o.ldp_x, side)
                              : patav::ldp_slope_exact(patav::recurrence_log_counts(stat, o.ldp_n), o.ldp_x, side);
    Manifest m("ldp", o.timing);
    m.params["family"] = o.ldp_family;
    m.params["x"] = o.ldp_x;
    m.params["n"] = o.ldp_n;
    m.params["side"] = o.ldp_side;
    m.params["mode"] = exact ? "exact" : "logfloat";

    Json payload;
    payload["family"] = patav::to_string(report.family);
    payload["statistic"] = std::string(patav::to_string(report.statistic));
    payload["x"] = report.x;
    payload["n"] = report.n;
    payload["side"] = std::string(patav::to_string(report.side));
    payload["log_tail"] = finite_or_null(report.log_tail);
    payload["exact_slope"] = finite_or_null(report.exact_slope);
    payload["closed_form"] = report.closed_form;
    payload["gap"] = finite_or_null(report.gap);
    payload["diagnostic"] = report.diagnostic ? Json(*report.diagnostic) : Json(nullptr);
    print_json(m.wrap(payload));
    return kOk;
}

int cmd_sample(const Options& o) {
    const patav::SamplerConfig config{patav::parse_pattern(o.sample_pattern), o.sample_n, o.sample_seed,
                                      o.sample_reps};
    const auto stat = patav::parse_statistic(o.sample_stat);
    Manifest m("sample", o.timing);
    m.params["pattern"] = o.sample_pattern;
    m.params["n"] = o.sample_n;
    m.params["reps"] = o.sample_reps;
    m.params["stat"] = o.sample_stat;
    if (o.sample_tail) {
        m.params["tail"] = *o.sample_tail;
        m.params["side"] = o.sample_side;
    }
    m.seed = o.sample_seed;

    Json payload;
    payload["statistic"] = o.sample_stat;
    payload["n"] = o.sample_n;
    payload["reps"] = o.sample_reps;
    if (o.sample_tail) {
        const auto est = patav::estimate_tail(config, stat, *o.sample_tail, patav::parse_side(o.sample_side),
                                              o.sample_workers);
        payload["kind"] = "tail";
        payload["x"] = est.x;
        payload["side"] = std::string(patav::to_string(est.side));
        payload["hits"] = est.hits;
        payload["p_hat"] = est.p_hat;
        payload["ci_radius"] = est.ci_radius;
        payload["slope_hat"] = est.slope_hat ? Json(*est.slope_hat) : Json(nullptr);
        payload["below_resolution"] = est.below_resolution;
        payload["upper_bound"] = est.upper_bound;
    } else {
        const auto est = patav::sample_variance_check(config, stat, o.sample_workers);
        payload["kind"] = "moments";
        payload["mean"] = est.mean;
        payload["variance"] = est.variance;
        payload["standard_error"] = est.standard_error;
    }
    print_json(m.wrap(payload));
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto level = patav::parse_verify_level(o.verify_level);
    std::vector<int> failed;
    patav::run_acceptance(level, [&](const patav::CriterionResult& r) {
        std::cout << patav::format_result_line(r) << std::endl;
        if (!r.passed) failed.push_back(r.id);
    });
    if (failed.empty()) {
        std::cout << "all " << patav::kCriterionCount << " criteria passed\n";
        return kOk;
    }
    std::cout << failed.size() << " criteria failed:";
    for (int id : failed) std::printf(" AC-%02d", id);
    std::cout << '\n';
    return kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statistics of permutations avoiding a length-3 pattern"};
    app.require_subcommand(1);
    app.set_version_flag("--version", patav::kVersion);
    Options o;
    app.add_flag("--timing", o.timing, "Include wall time in JSON manifests");

    auto* catalan = app.add_subcommand("catalan", "Catalan number C_n");
    catalan->add_option("--n", o.catalan_n)->required();
    auto* exact_flag = catalan->add_flag("--exact", "Decimal value (default)");
    catalan->add_flag("--log", o.catalan_log, "Natural log of C_n")->excludes(exact_flag);
    catalan->add_option("--format", o.catalan_format)->check(CLI::IsMember({"text", "json"}));

    auto* dist = app.add_subcommand("dist", "Exact distribution of a statistic over avoiders");
    dist->add_option("--pattern", o.dist_pattern)->check(CLI::IsMember(kPatternNames));
    dist->add_option("--stat", o.dist_stat)->check(CLI::IsMember({"alt", "altpm", "lis"}));
    dist->add_option("--n", o.dist_n)->required();
    dist->add_option("--mode", o.dist_mode)->check(CLI::IsMember({"exact", "logfloat", "brute"}));
    dist->add_option("--format", o.dist_format)->check(CLI::IsMember({"csv", "json"}));

    auto* gf = app.add_subcommand("gf", "Generating-function coefficients C_n M_n");
    gf->add_option("--family", o.gf_family)->required()->check(CLI::IsMember(kFamilyNames));
    gf->add_option("--n", o.gf_n)->required();
    auto* u_exact = gf->add_flag("--u-exact", "Polynomials in u = e^lambda (default)");
    gf->add_option("--lambda", o.gf_lambda, "Evaluate at u = e^lambda")->excludes(u_exact);

    auto* rate = app.add_subcommand("rate", "Rate function, its Legendre-Fenchel form and relative entropy");
    rate->add_option("--family", o.rate_family)->required()->check(CLI::IsMember(kFamilyNames));
    rate->add_option("--x", o.rate_x)->required();

    auto* ldp = app.add_subcommand("ldp", "Finite-n large-deviation slope against the rate function");
    ldp->add_option("--family", o.ldp_family)->required()->check(CLI::IsMember(kFamilyNames));
    ldp->add_option("--x", o.ldp_x)->required();
    ldp->add_option("--n", o.ldp_n)->required();
    ldp->add_option("--side", o.ldp_side)->check(CLI::IsMember(kSideNames));
    ldp->add_option("--mode", o.ldp_mode, "exact up to the exact cap, logfloat above")
        ->check(CLI::IsMember({"auto", "exact", "logfloat"}));

    auto* sample = app.add_subcommand("sample", "Monte-Carlo estimates from exact uniform sampling");
    sample->add_option("--pattern", o.sample_pattern)->check(CLI::IsMember(kPatternNames));
    sample->add_option("--n", o.sample_n)->required();
    sample->add_option("--reps", o.sample_reps);
    sample->add_option("--seed", o.sample_seed);
    sample->add_option("--stat", o.sample_stat)->check(CLI::IsMember({"alt", "altpm", "lis"}));
    auto* tail = sample->add_option("--tail", o.sample_tail, "Estimate P(stat side n x) instead of moments");
    sample->add_option("--side", o.sample_side)->check(CLI::IsMember({"ge", "le"}))->needs(tail);
    sample->add_option("--workers", o.sample_workers)->check(CLI::Range(1, 256));

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--level", o.verify_level)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*catalan) return cmd_catalan(o);
        if (*dist) return cmd_dist(o);
        if (*gf) return cmd_gf(o);
        if (*rate) return cmd_rate(o);
        if (*ldp) return cmd_ldp(o);
        if (*sample) return cmd_sample(o);
        if (*verify) return cmd_verify(o);
    } catch (const patav::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const patav::SaturationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRange;
    } catch (const patav::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRange;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}
