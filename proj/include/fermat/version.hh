#ifndef FERMAT_VERSION_HH
#define FERMAT_VERSION_HH

namespace fermat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fermat

#endif  // FERMAT_VERSION_HH
