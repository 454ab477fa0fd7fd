#pragma once

namespace tdwell {
inline constexpr const char* kVersion = "1.0.0";
}
