#pragma once

namespace dets2 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dets2
