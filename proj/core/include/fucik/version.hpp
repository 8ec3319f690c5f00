#pragma once

namespace fucik {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "fucik/1";

}  // namespace fucik
