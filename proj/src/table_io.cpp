#include "patav/table_io.hpp"

#include "patav/errors.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace patav {

namespace {

void place(CountTable& t, long k, const mpz_class& c) {
    if (k < 0) throw ArgumentError("count table: negative value " + std::to_string(k));
    if (static_cast<std::size_t>(k) >= t.counts.size()) t.counts.resize(k + 1, 0);
    t.counts[k] = c;
}

void normalize(CountTable& t) {
    while (t.counts.size() > 1 && t.counts.back() == 0) t.counts.pop_back();
    if (t.counts.empty()) t.counts.emplace_back(0);
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

std::string to_csv(const CountTable& table) {
    std::string out = "value,count\n";
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
        if (sgn(table.counts[k]) == 0) continue;
        out += std::to_string(k) + "," + table.counts[k].get_str() + "\n";
    }
    return out;
}

std::string to_csv(const LogFloatTable& table) {
    std::string out = "value,log_count\n";
    for (std::size_t k = 0; k < table.log_counts.size(); ++k) {
        if (table.log_counts[k] == -std::numeric_limits<double>::infinity()) continue;
        out += std::to_string(k) + "," + format_double(table.log_counts[k]) + "\n";
    }
    return out;
}

Json to_json(const CountTable& table) {
    Json j;
    j["n"] = table.n;
    j["pattern"] = to_string(table.pattern);
    j["statistic"] = to_string(table.statistic);
    j["mode"] = "exact";
    Json counts = Json::object();
    for (std::size_t k = 0; k < table.counts.size(); ++k)
        if (sgn(table.counts[k]) != 0) counts[std::to_string(k)] = table.counts[k].get_str();
    j["counts"] = std::move(counts);
    return j;
}

Json to_json(const LogFloatTable& table) {
    Json j;
    j["n"] = table.n;
    j["pattern"] = to_string(table.pattern);
    j["statistic"] = to_string(table.statistic);
    j["mode"] = "logfloat";
    Json counts = Json::object();
    for (std::size_t k = 0; k < table.log_counts.size(); ++k)
        if (table.log_counts[k] != -std::numeric_limits<double>::infinity())
            counts[std::to_string(k)] = table.log_counts[k];
    j["log_counts"] = std::move(counts);
    return j;
}

CountTable count_table_from_csv(std::string_view csv, int n, StatisticId stat, PatternId pattern) {
    CountTable t{n, stat, pattern, {}};
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line != "value,count") throw ArgumentError("count CSV: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ArgumentError("count CSV: malformed row '" + line + "'");
        try {
            place(t, std::stol(line.substr(0, comma)), mpz_class(line.substr(comma + 1)));
        } catch (const std::invalid_argument&) {
            throw ArgumentError("count CSV: malformed row '" + line + "'");
        }
    }
    normalize(t);
    return t;
}

CountTable count_table_from_json(const Json& j) {
    try {
        if (j.at("mode") != "exact") throw ArgumentError("count JSON: mode is not exact");
        CountTable t{j.at("n").get<int>(), parse_statistic(j.at("statistic").get<std::string>()),
                     parse_pattern(j.at("pattern").get<std::string>()), {}};
        for (const auto& [key, value] : j.at("counts").items())
            place(t, std::stol(key), mpz_class(value.get<std::string>()));
        normalize(t);
        return t;
    } catch (const Json::exception& e) {
        throw ArgumentError(std::string("count JSON: ") + e.what());
    }
}

LogFloatTable log_table_from_json(const Json& j) {
    try {
        if (j.at("mode") != "logfloat") throw ArgumentError("log JSON: mode is not logfloat");
        LogFloatTable t{j.at("n").get<int>(), parse_statistic(j.at("statistic").get<std::string>()),
                        parse_pattern(j.at("pattern").get<std::string>()), {}};
        for (const auto& [key, value] : j.at("log_counts").items()) {
            const long k = std::stol(key);
            if (k < 0) throw ArgumentError("log JSON: negative value");
            if (static_cast<std::size_t>(k) >= t.log_counts.size())
                t.log_counts.resize(k + 1, -std::numeric_limits<double>::infinity());
            t.log_counts[k] = value.get<double>();
        }
        return t;
    } catch (const Json::exception& e) {
        throw ArgumentError(std::string("log JSON: ") + e.what());
    }
}

} // namespace patav
