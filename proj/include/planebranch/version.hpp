#pragma once

namespace planebranch {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace planebranch
