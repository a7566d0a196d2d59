#include <algorithm>
#include <exception>
#include <limits>
#include <new>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include <fmt/format.h>

#include "hls/errors.hpp"
#include "hls/hcoeff.hpp"
#include "hls/integer.hpp"

namespace hls {

namespace {

inline void bump(std::uint64_t& counter, std::uint64_t amount)
{
#ifdef HLS_CHECKED_COUNTERS
    if (__builtin_add_overflow(counter, amount, &counter)) {
        throw std::overflow_error("sieve_h: counter overflow");
    }
#else
    counter += amount;
#endif
}

// Marks every representation contributed by m in [m_begin, m_end).
void mark_range(std::vector<std::uint64_t>& table, std::uint64_t x, std::uint64_t m_begin,
                std::uint64_t m_end)
{
    for (std::uint64_t m = m_begin; m < m_end; ++m) {
        const std::uint64_t sq = m * m;
        bump(table[sq], 1);
        if (sq <= x - sq) {
            bump(table[2 * sq], 1);
        }
        // m^2 + jm for j = 1..m-1; the last one is 2m^2 - m.
        for (std::uint64_t n = sq + m, j = 1; j < m && n <= x; ++j, n += m) {
            bump(table[n], 2);
        }
    }
}

std::uint64_t marks_for(std::uint64_t m, std::uint64_t x)
{
    const std::uint64_t sq = m * m;
    return 2 + std::min(m - 1, (x - sq) / m);
}

// Splits 1..max_m into `parts` contiguous ranges of roughly equal marking work.
std::vector<std::uint64_t> chunk_bounds(std::uint64_t max_m, std::uint64_t x, unsigned parts)
{
    std::uint64_t total = 0;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        total += marks_for(m, x);
    }
    std::vector<std::uint64_t> bounds{1};
    std::uint64_t acc = 0;
    for (std::uint64_t m = 1; m <= max_m && bounds.size() < parts; ++m) {
        acc += marks_for(m, x);
        if (acc * parts >= total * bounds.size()) {
            bounds.push_back(m + 1);
        }
    }
    while (bounds.size() < parts) {
        bounds.push_back(max_m + 1);
    }
    bounds.push_back(max_m + 1);
    return bounds;
}

void check_footprint(std::uint64_t x, unsigned tables)
{
    constexpr std::uint64_t word = sizeof(std::uint64_t);
    const std::uint64_t max_entries = std::numeric_limits<std::uint64_t>::max() / word / tables;
    if (x >= max_entries) {
        throw ResourceError(fmt::format("sieve_h: X = {} is too large to address", x));
    }
    const std::uint64_t bytes = (x + 1) * word * tables;
    const long pages = ::sysconf(_SC_PHYS_PAGES);
    const long page_size = ::sysconf(_SC_PAGESIZE);
    if (pages > 0 && page_size > 0 &&
        bytes > static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size)) {
        throw ResourceError(fmt::format(
            "sieve_h: X = {} needs {} bytes, more than physical memory", x, bytes));
    }
}

} // namespace

CoeffTable sieve_h(std::uint64_t x, unsigned workers)
{
    if (x == 0) {
        throw PreconditionError("sieve_h: X must be positive");
    }
    if (workers == 0) {
        workers = default_workers();
    }
    const std::uint64_t max_m = isqrt(x);
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, max_m));

    check_footprint(x, workers);
    std::vector<std::vector<std::uint64_t>> tables;
    try {
        tables.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            tables.emplace_back(x + 1, 0);
        }
    } catch (const std::bad_alloc&) {
        throw ResourceError(fmt::format("sieve_h: cannot allocate tables for X = {}", x));
    }

    if (workers == 1) {
        mark_range(tables[0], x, 1, max_m + 1);
    } else {
        const auto bounds = chunk_bounds(max_m, x, workers);
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&tables, &bounds, &failures, x, w] {
                try {
                    mark_range(tables[w], x, bounds[w], bounds[w + 1]);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        threads.clear(); // joins
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
        for (unsigned w = 1; w < workers; ++w) {
            auto& dst = tables[0];
            const auto& src = tables[w];
            for (std::uint64_t n = 1; n <= x; ++n) {
                bump(dst[n], src[n]);
            }
            std::vector<std::uint64_t>().swap(tables[w]);
        }
    }
    return CoeffTable(x, std::move(tables[0]));
}

} // namespace hls
