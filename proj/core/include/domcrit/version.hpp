#pragma once

namespace domcrit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace domcrit
