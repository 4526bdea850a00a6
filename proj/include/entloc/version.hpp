#pragma once

namespace entloc {
inline constexpr const char* kVersion = "0.1.0";
}
