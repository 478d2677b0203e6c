#ifndef MECSCHED_VERSION_HPP
#define MECSCHED_VERSION_HPP

#include <string_view>

namespace mecsched {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kVersionString = "mecsched-0.1.0";

}  // namespace mecsched

#endif
