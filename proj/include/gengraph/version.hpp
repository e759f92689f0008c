#pragma once

namespace gengraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gengraph
