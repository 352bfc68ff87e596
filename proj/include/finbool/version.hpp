#pragma once

namespace finbool {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "finbool";

}  // namespace finbool
