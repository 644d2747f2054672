#pragma once

namespace uclat {

inline constexpr const char* kToolVersion = "uclat 0.1.0";

}  // namespace uclat
