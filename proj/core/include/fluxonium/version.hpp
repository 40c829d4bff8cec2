#ifndef FLUXONIUM_VERSION_HPP
#define FLUXONIUM_VERSION_HPP

namespace fluxonium {

inline constexpr const char* version_string = "0.1.0";

}

#endif
