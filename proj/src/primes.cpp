#include "hls/primes.hpp"

namespace hls {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) {
            continue;
        }
        primes.push_back(p);
        if (p <= limit / p) {
            for (std::uint64_t q = p * p; q <= limit; q += p) {
                composite[q] = true;
            }
        }
    }
    return primes;
}

} // namespace hls
