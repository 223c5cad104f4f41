#pragma once

namespace domcyc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace domcyc
