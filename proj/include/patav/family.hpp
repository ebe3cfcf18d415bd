#pragma once

#include <string>
#include <string_view>

namespace patav {

/// Which limit law: longest alternating (alt) or longest increasing (inc).
enum class Family { Alt, Inc };

std::string to_string(Family f);
Family parse_family(std::string_view text);

} // namespace patav
