#pragma once

namespace subcond {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subcond
