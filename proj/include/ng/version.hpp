#pragma once

namespace ng {

// Bump on any change that can alter exported bytes; cache keys embed it.
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace ng
