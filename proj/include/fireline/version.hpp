#pragma once

namespace fireline {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fireline
