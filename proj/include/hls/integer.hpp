#pragma once

#include <cstdint>

namespace hls {

/// floor(sqrt(n)) by integer Newton iteration; exact for every 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// n = x^2 for some integer x >= 0.
bool is_square(std::uint64_t n) noexcept;

/// n = 2x^2 for some integer x >= 0.
bool is_double_square(std::uint64_t n) noexcept;

} // namespace hls
