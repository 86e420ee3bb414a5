#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace rkcodes::detail {

// In place over Z_m: v[T] <- sum_{S subset T} v[S]. Size must be a power of two.
inline void subset_zeta(std::span<std::uint32_t> v, std::uint32_t m) {
  const std::size_t n = v.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t & bit) {
        v[t] = static_cast<std::uint32_t>((std::uint64_t{v[t]} + v[t ^ bit]) % m);
      }
    }
  }
}

// Inverse of subset_zeta: v[S] <- sum_{T subset S} (-1)^{|S \ T|} v[T].
inline void subset_mobius(std::span<std::uint32_t> v, std::uint32_t m) {
  const std::size_t n = v.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t & bit) {
        v[t] = static_cast<std::uint32_t>((std::uint64_t{v[t]} + m - v[t ^ bit]) % m);
      }
    }
  }
}

}  // namespace rkcodes::detail
