#pragma once

namespace patav {

inline constexpr const char* kVersion = "0.1.0";

} // namespace patav
