#pragma once

// Published value distribution: #{1 <= n <= X : h(n) = v} for v = 0..16.

#include <array>
#include <cstdint>

namespace golden {

inline constexpr std::array<std::uint64_t, 6> kColumns{1000, 5000, 10000, 20000, 50000, 100000};

// kCounts[v][column]
inline constexpr std::array<std::array<std::uint64_t, 6>, 17> kCounts{{
    {664, 3486, 7068, 14312, 36249, 73130},
    {44, 93, 129, 179, 275, 380},
    {255, 1181, 2300, 4455, 10718, 20798},
    {9, 23, 32, 46, 74, 108},
    {27, 180, 369, 758, 1944, 3969},
    {0, 3, 7, 11, 21, 31},
    {1, 32, 80, 186, 509, 1051},
    {0, 1, 2, 5, 8, 14},
    {0, 1, 13, 41, 148, 354},
    {0, 0, 0, 0, 3, 5},
    {0, 0, 0, 7, 43, 120},
    {0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 8, 28},
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 10},
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1},
}};

} // namespace golden
