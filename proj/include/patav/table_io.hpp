#pragma once

#include "patav/count_table.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace patav {

using Json = nlohmann::ordered_json;

/// "value,count" header, one row per nonzero count, ascending value.
std::string to_csv(const CountTable& table);
/// "value,log_count" header, one row per nonzero count.
std::string to_csv(const LogFloatTable& table);

/// {n, pattern, statistic, mode: "exact", counts: {k: decimal string}}.
Json to_json(const CountTable& table);
/// {n, pattern, statistic, mode: "logfloat", log_counts: {k: number}}.
Json to_json(const LogFloatTable& table);

/// Inverse of to_csv; CSV carries no metadata, so it is supplied.
CountTable count_table_from_csv(std::string_view csv, int n, StatisticId stat, PatternId pattern);
CountTable count_table_from_json(const Json& j);
LogFloatTable log_table_from_json(const Json& j);

} // namespace patav
