#pragma once

namespace satake {

inline constexpr const char* kToolName = "satake-kit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace satake
