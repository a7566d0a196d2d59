#pragma once

#include <cstdint>
#include <vector>

namespace hls {

/// All primes p <= limit (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace hls
