#pragma once

#include <string_view>

namespace arithplus {

// Keep in step with the CMake project version.
inline constexpr std::string_view kEngineVersion = "0.1.0";

}  // namespace arithplus
