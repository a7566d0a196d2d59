#include "hls/integer.hpp"

#include <bit>

namespace hls {

std::uint64_t isqrt(std::uint64_t n) noexcept
{
    if (n < 2) {
        return n;
    }
    // 2^ceil(bits/2) >= sqrt(n), so Newton's iteration decreases monotonically
    // to the floor. x <= 2^32 keeps x + n/x inside 64 bits.
    const int bits = std::bit_width(n);
    std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
    for (;;) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) {
            return x;
        }
        x = y;
    }
}

bool is_square(std::uint64_t n) noexcept
{
    const std::uint64_t r = isqrt(n);
    return r * r == n;
}

bool is_double_square(std::uint64_t n) noexcept
{
    return n % 2 == 0 && is_square(n / 2);
}

} // namespace hls
