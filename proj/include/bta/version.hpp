#pragma once

namespace bta {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bta
