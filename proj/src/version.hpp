#pragma once

namespace liecurve {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace liecurve
