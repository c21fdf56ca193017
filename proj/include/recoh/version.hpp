#pragma once

namespace recoh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace recoh
