#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace newsdesk {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

/// 64-bit FNV-1a over raw bytes.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = kFnvOffsetBasis) noexcept {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

/// Lower-case, zero-padded 16 digit hex rendering.
std::string to_hex64(std::uint64_t value);

}  // namespace newsdesk
