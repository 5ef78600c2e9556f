#pragma once

namespace wrange {

inline constexpr const char* version = "0.1.0";

}  // namespace wrange
