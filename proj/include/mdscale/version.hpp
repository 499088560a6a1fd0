#pragma once

namespace mdscale {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mdscale
