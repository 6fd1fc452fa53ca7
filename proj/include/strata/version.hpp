#ifndef STRATA_VERSION_HPP
#define STRATA_VERSION_HPP

namespace strata {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

} // namespace strata

#endif
