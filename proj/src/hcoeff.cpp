#include "hls/hcoeff.hpp"

#include <thread>

#include <fmt/format.h>

#include "hls/errors.hpp"
#include "hls/integer.hpp"

namespace hls {

namespace {

void require_positive(std::uint64_t n, const char* op)
{
    if (n == 0) {
        throw DomainError(fmt::format("{}: n must be positive", op));
    }
}

// x^2 < n < 2x^2, written to stay inside 64 bits for any x <= isqrt(n).
bool in_pair_window(std::uint64_t x, std::uint64_t n) noexcept
{
    const std::uint64_t sq = x * x;
    return sq < n && n - sq < sq;
}

} // namespace

RepCounts classify(std::uint64_t n)
{
    require_positive(n, "classify");
    RepCounts r;
    r.n = n;
    const std::uint64_t root = isqrt(n);
    for (std::uint64_t d = 1; d <= root; ++d) {
        if (n % d == 0 && in_pair_window(d, n)) {
            ++r.a;
        }
    }
    r.b = is_square(n) ? 1 : 0;
    r.c = is_double_square(n) ? 1 : 0;
    r.h = 2 * r.a + r.b + r.c;
    return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> a_pairs(std::uint64_t n)
{
    require_positive(n, "a_pairs");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    const std::uint64_t root = isqrt(n);
    for (std::uint64_t x = 1; x <= root; ++x) {
        if (n % x == 0 && in_pair_window(x, n)) {
            pairs.emplace_back(x, n / x - x);
        }
    }
    return pairs;
}

std::uint64_t h_bruteforce(std::uint64_t n)
{
    require_positive(n, "h_bruteforce");
    std::uint64_t pairs = 0;
    for (std::uint64_t x = 1; x <= n; ++x) {
        if (n % x != 0) {
            continue;
        }
        const std::uint64_t sum = n / x; // x + y
        if (sum > x && sum - x <= x - 1) {
            ++pairs;
        }
    }
    std::uint64_t squares = 0;
    std::uint64_t double_squares = 0;
    for (std::uint64_t x = 1; x * x <= n; ++x) {
        squares += (x * x == n);
        double_squares += (2 * x * x == n);
    }
    return 2 * pairs + squares + double_squares;
}

CoeffTable::CoeffTable(std::uint64_t limit, std::vector<std::uint64_t> values)
    : values_(std::move(values))
{
    if (values_.size() != limit + 1) {
        throw PreconditionError(fmt::format(
            "CoeffTable: limit {} needs {} entries, got {}", limit, limit + 1, values_.size()));
    }
    if (values_[0] != 0) {
        throw PreconditionError("CoeffTable: h(0) must be 0");
    }
}

std::uint64_t CoeffTable::at(std::uint64_t n) const
{
    if (n > limit()) {
        throw PreconditionError(fmt::format("CoeffTable: n = {} beyond limit {}", n, limit()));
    }
    return values_[n];
}

CoeffTable CoeffTable::truncated(std::uint64_t x) const
{
    require_covers(*this, x, "truncated");
    return CoeffTable(x, {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(x + 1)});
}

void require_covers(const CoeffTable& table, std::uint64_t x, const char* op)
{
    if (x == 0 || x > table.limit()) {
        throw PreconditionError(
            fmt::format("{}: X = {} outside table range 1..{}", op, x, table.limit()));
    }
}

unsigned default_workers() noexcept
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace hls
