#pragma once

namespace heckepairs {

inline constexpr const char* kVersion = "0.1.0";

}
