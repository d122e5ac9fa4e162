#pragma once

namespace cwcell::tool {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cwcell::tool
