#pragma once

// Reference computations used only by tests. Nothing here calls into the
// library; each routine recomputes its quantity from first principles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;

/// Truncated product of two int64 polynomials of equal length.
inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

/// prod_{k=1..order} (1 + sign q^k), truncated at order.
inline Poly binomial_product(std::size_t order, int sign)
{
    Poly acc(order + 1, 0);
    acc[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        Poly factor(order + 1, 0);
        factor[0] = 1;
        factor[k] = sign;
        acc = poly_mul(acc, factor);
    }
    return acc;
}

/// Visits every partition of n as a non-increasing list of parts.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

inline std::int64_t partition_count(int n)
{
    std::int64_t count = 0;
    for_each_partition(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Number of partitions of n into distinct parts with even rank minus the
/// number with odd rank (rank = largest part - number of parts).
inline std::int64_t distinct_rank_parity(int n)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
            return;
        }
        const int rank = parts.front() - static_cast<int>(parts.size());
        total += (rank % 2 == 0) ? 1 : -1;
    });
    return total;
}

/// Crank of a partition: the largest part when there are no ones, otherwise
/// (number of parts larger than the number of ones) - (number of ones).
inline int crank(const std::vector<int>& parts)
{
    const int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (ones == 0) {
        return parts.front();
    }
    const int larger = static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [&](int p) { return p > ones; }));
    return larger - ones;
}

/// sum_{m > 0} m * M(m, n) for n >= 2, M(m, n) = #partitions of n with crank m.
inline std::int64_t first_positive_crank_moment(int n)
{
    std::int64_t total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const int c = crank(parts);
        if (c > 0) {
            total += c;
        }
    });
    return total;
}

/// Pairs (x, y) with x(x+y) = n and 1 <= y <= x-1, by scanning both coordinates.
inline std::uint64_t pair_count_2d(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x * x < n; ++x) {
        for (std::uint64_t y = 1; y + 1 <= x; ++y) {
            if (x * (x + y) == n) {
                ++count;
            }
        }
    }
    return count;
}

/// counts[n] = #{(x, y) : x(x+y) = n, 1 <= y <= x-1} for n <= limit, by
/// walking every admissible pair once.
inline std::vector<std::uint64_t> pair_counts_upto(std::uint64_t limit)
{
    std::vector<std::uint64_t> counts(limit + 1, 0);
    for (std::uint64_t x = 2; x * (x + 1) <= limit; ++x) {
        for (std::uint64_t y = 1; y <= x - 1 && x * (x + y) <= limit; ++y) {
            ++counts[x * (x + y)];
        }
    }
    return counts;
}

} // namespace oracle
