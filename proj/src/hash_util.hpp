#pragma once

#include <cstddef>
#include <cstdint>

namespace sesstype::detail {

inline std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  // boost::hash_combine with a 64-bit golden ratio constant.
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4));
}

}  // namespace sesstype::detail
