#pragma once

namespace psub {

inline constexpr const char* kToolName = "psub";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace psub
