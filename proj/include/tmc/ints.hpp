#ifndef TMC_INTS_HPP
#define TMC_INTS_HPP

#include <cstdint>

namespace tmc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

}  // namespace tmc

#endif
