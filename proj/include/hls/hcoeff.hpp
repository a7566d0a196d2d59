#pragma once

// Coefficients h(n) of the half Lerch sum.
//
// With A_n = {(x, y) : n = x(x+y), 1 <= y <= x-1}, B_n = {x : n = x^2} and
// C_n = {x : n = 2x^2}, every coefficient decomposes as
//
//     h(n) = 2 #A_n + #B_n + #C_n.
//
// (x, y) is in A_n exactly when x is a divisor of n with x^2 < n < 2x^2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hls {

struct RepCounts {
    std::uint64_t n = 0;
    std::uint64_t a = 0; ///< #A_n
    std::uint64_t b = 0; ///< #B_n, 0 or 1
    std::uint64_t c = 0; ///< #C_n, 0 or 1
    std::uint64_t h = 0; ///< 2a + b + c

    friend bool operator==(const RepCounts&, const RepCounts&) = default;
};

/// Divisor-criterion decomposition of h(n) in O(sqrt n). Throws DomainError for n = 0.
RepCounts classify(std::uint64_t n);

/// The pairs (x, y) of A_n, ordered by x.
std::vector<std::pair<std::uint64_t, std::uint64_t>> a_pairs(std::uint64_t n);

/// Reference value of h(n) by literal enumeration of every x <= n. O(n);
/// shares no code with classify. Throws DomainError for n = 0.
std::uint64_t h_bruteforce(std::uint64_t n);

/// h(0..X) as a dense table; index 0 holds h(0) = 0.
class CoeffTable {
public:
    /// values[0] must be 0 and values.size() == limit + 1.
    CoeffTable(std::uint64_t limit, std::vector<std::uint64_t> values);

    std::uint64_t limit() const noexcept { return values_.size() - 1; }

    /// h(n) for 0 <= n <= limit; throws PreconditionError beyond the limit.
    std::uint64_t at(std::uint64_t n) const;
    std::uint64_t operator[](std::uint64_t n) const noexcept { return values_[n]; }

    std::span<const std::uint64_t> values() const noexcept { return values_; }

    /// Copy of the first X entries (X <= limit).
    CoeffTable truncated(std::uint64_t x) const;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

private:
    std::vector<std::uint64_t> values_;
};

/// Throws PreconditionError unless 1 <= x <= table.limit().
void require_covers(const CoeffTable& table, std::uint64_t x, const char* op);

/// Worker count used when the caller passes 0: std::thread::hardware_concurrency(), at least 1.
unsigned default_workers() noexcept;

/// Bulk h(1..X) by marking n = m^2, 2m^2 and m^2 + jm (1 <= j <= m-1) for every
/// m with m^2 <= X. The m-range is split into contiguous chunks, one private
/// table per worker, merged by addition; output is independent of `workers`.
/// Throws PreconditionError for X = 0 and ResourceError when the tables
/// cannot be allocated.
CoeffTable sieve_h(std::uint64_t x, unsigned workers = 1);

} // namespace hls
