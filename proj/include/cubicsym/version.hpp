#ifndef CUBICSYM_VERSION_HPP
#define CUBICSYM_VERSION_HPP

namespace cubicsym {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
