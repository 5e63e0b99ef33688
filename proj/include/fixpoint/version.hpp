#pragma once

namespace fixpoint {

inline constexpr const char* tool_name = "fixpoint";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace fixpoint
