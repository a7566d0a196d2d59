#include "hls/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "hls/errors.hpp"
#include "hls/integer.hpp"
#include "hls/primes.hpp"

namespace hls {

namespace {

constexpr std::array<TheoremFamily, 9> kFamilies{{
    {Family::t1_2, "1.2", "n = p^d, p odd prime, d odd", 0},
    {Family::t1_3, "1.3", "n = p1...pk, distinct odd primes, k >= 2, pk > 2 p1...p(k-1)", 0},
    {Family::t2_2, "2.2", "n = 2^k, k >= 1", 1},
    {Family::t2_3, "2.3", "n = p^(2k), p odd prime, k >= 1", 1},
    {Family::t2_4, "2.4", "n = p1^2 p2^2, odd primes, p2 > sqrt(2) p1", 1},
    {Family::t2_4_as_printed, "2.4-printed", "n = p1^2 p2^2, odd primes, p1 != p2, p2 > sqrt(p1)",
     1},
    {Family::t3_2, "3.2", "n = p1 p2, odd primes, p1 < p2 < 2 p1", 2},
    {Family::t3_3, "3.3", "n = p(p+1) or (p-1)p, p odd prime", 2},
    {Family::t4, "4", "n = p1^2 p2^2, odd primes, p1 < p2 < sqrt(2) p1", 3},
}};

constexpr std::array<Family, 8> kVerified{Family::t1_2, Family::t1_3, Family::t2_2,
                                          Family::t2_3, Family::t2_4, Family::t3_2,
                                          Family::t3_3, Family::t4};

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit)
{
    auto primes = primes_up_to(limit);
    if (!primes.empty() && primes.front() == 2) {
        primes.erase(primes.begin());
    }
    return primes;
}

// Powers base^e <= limit for e = first, first + step, ...
void push_powers(std::vector<std::uint64_t>& out, std::uint64_t base, unsigned first,
                 unsigned step, std::uint64_t limit)
{
    std::uint64_t value = 1;
    for (unsigned e = 0; e < first; ++e) {
        if (value > limit / base) {
            return;
        }
        value *= base;
    }
    const std::uint64_t stride = [&] {
        std::uint64_t s = 1;
        for (unsigned e = 0; e < step; ++e) {
            s *= base;
        }
        return s;
    }();
    for (;;) {
        out.push_back(value);
        if (value > limit / stride) {
            return;
        }
        value *= stride;
    }
}

// Squares of products p1 p2 of odd primes, p1 < p2, (p1 p2)^2 <= limit,
// filtered by an ordered-pair predicate.
template <typename Keep>
void push_square_pairs(std::vector<std::uint64_t>& out, std::uint64_t limit, Keep keep)
{
    const std::uint64_t root = isqrt(limit);
    const auto primes = odd_primes_up_to(root / 3);
    for (std::uint64_t p1 : primes) {
        for (std::uint64_t p2 : primes) {
            if (p1 == p2) {
                continue;
            }
            if (p2 > root / p1) {
                break;
            }
            if (keep(p1, p2)) {
                const std::uint64_t r = p1 * p2;
                out.push_back(r * r);
            }
        }
    }
}

void push_t1_3(std::vector<std::uint64_t>& out, std::uint64_t limit)
{
    const auto primes = odd_primes_up_to(limit / 3);
    // prefix = p1...p(k-1); the largest prime must exceed 2 * prefix.
    std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t from,
                                                                 std::uint64_t prefix) {
        if (prefix > 1) {
            auto it = std::upper_bound(primes.begin(), primes.end(), 2 * prefix);
            for (; it != primes.end() && *it <= limit / prefix; ++it) {
                out.push_back(prefix * *it);
            }
        }
        for (std::size_t i = from; i < primes.size(); ++i) {
            const std::uint64_t next = prefix * primes[i];
            // Room for a largest prime > 2 * next: next * (2 next + 1) <= limit.
            if (next > limit / (2 * next + 1)) {
                break;
            }
            extend(i + 1, next);
        }
    };
    extend(0, 1);
}

std::uint64_t count_class(const CoeffTable& table, std::uint64_t x, std::uint64_t v)
{
    const auto values = table.values();
    return static_cast<std::uint64_t>(
        std::count(values.begin() + 1, values.begin() + static_cast<std::ptrdiff_t>(x + 1), v));
}

void require_class(unsigned value_class)
{
    if (value_class > 2) {
        throw DomainError(fmt::format("no counting bound for value class {}", value_class));
    }
}

double slack(double bound)
{
    return kBoundSlack * std::max(1.0, std::abs(bound));
}

template <typename Lookup>
StructuralReport check_family(Family id, std::uint64_t limit, Lookup h_of)
{
    if (limit < 2) {
        throw PreconditionError("verify_structural: limit must be at least 2");
    }
    const auto& info = family_info(id);
    StructuralReport report{id, limit, 0, {}};
    for (std::uint64_t n : family_members(id, limit)) {
        ++report.members_checked;
        const std::uint64_t h = h_of(n);
        if (h != info.expected_value) {
            report.violations.push_back({n, info.expected_value, h});
        }
    }
    return report;
}

} // namespace

const TheoremFamily& family_info(Family id)
{
    for (const auto& f : kFamilies) {
        if (f.id == id) {
            return f;
        }
    }
    throw DomainError("unknown theorem family");
}

std::span<const Family> all_families() noexcept
{
    return kVerified;
}

Family parse_family(std::string_view tag)
{
    for (const auto& f : kFamilies) {
        if (f.tag == tag) {
            return f.id;
        }
    }
    throw DomainError(fmt::format("unknown theorem family '{}'", tag));
}

std::vector<std::uint64_t> family_members(Family id, std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    switch (id) {
    case Family::t1_2:
        for (std::uint64_t p : odd_primes_up_to(limit)) {
            push_powers(out, p, 1, 2, limit);
        }
        break;
    case Family::t1_3:
        push_t1_3(out, limit);
        break;
    case Family::t2_2:
        push_powers(out, 2, 1, 1, limit);
        break;
    case Family::t2_3:
        for (std::uint64_t p : odd_primes_up_to(isqrt(limit))) {
            push_powers(out, p, 2, 2, limit);
        }
        break;
    case Family::t2_4:
        push_square_pairs(out, limit,
                          [](std::uint64_t p1, std::uint64_t p2) { return p2 * p2 > 2 * p1 * p1; });
        break;
    case Family::t2_4_as_printed:
        push_square_pairs(out, limit,
                          [](std::uint64_t p1, std::uint64_t p2) { return p2 * p2 > p1; });
        break;
    case Family::t3_2: {
        const auto primes = odd_primes_up_to(2 * isqrt(limit) + 2);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const std::uint64_t p1 = primes[i];
            if (p1 > limit / p1) {
                break;
            }
            for (std::size_t j = i + 1; j < primes.size() && primes[j] < 2 * p1; ++j) {
                if (primes[j] > limit / p1) {
                    break;
                }
                out.push_back(p1 * primes[j]);
            }
        }
        break;
    }
    case Family::t3_3:
        for (std::uint64_t p : odd_primes_up_to(isqrt(limit) + 1)) {
            if (p - 1 <= limit / p) {
                out.push_back((p - 1) * p);
            }
            if (p <= limit / (p + 1)) {
                out.push_back(p * (p + 1));
            }
        }
        break;
    case Family::t4:
        push_square_pairs(out, limit, [](std::uint64_t p1, std::uint64_t p2) {
            return p1 < p2 && p2 * p2 < 2 * p1 * p1;
        });
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StructuralReport verify_structural(Family id, std::uint64_t limit)
{
    return check_family(id, limit, [](std::uint64_t n) { return classify(n).h; });
}

StructuralReport verify_structural(Family id, std::uint64_t limit, const CoeffTable& table)
{
    require_covers(table, limit, "verify_structural");
    return check_family(id, limit, [&table](std::uint64_t n) { return table[n]; });
}

std::optional<double> lower_bound(unsigned value_class, std::uint64_t x)
{
    require_class(value_class);
    if (value_class != 0) {
        return std::nullopt;
    }
    const double X = static_cast<double>(x);
    return X / 2 - (1.5 + std::sqrt(2.0)) * std::sqrt(X) - 1 - 3 * std::sqrt(2.0) / 2;
}

double upper_bound(unsigned value_class, std::uint64_t x)
{
    require_class(value_class);
    const double X = static_cast<double>(x);
    const double root = std::sqrt(X);
    switch (value_class) {
    case 0: return 3 * X / 4 - root / (2 * std::sqrt(2.0)) + 1;
    case 1: return (1 + 1 / std::sqrt(2.0)) * root;
    default: return X / 2 + (1.5 + std::sqrt(2.0)) * root + 1 + 3 * std::sqrt(2.0) / 2;
    }
}

BoundReport verify_bounds(unsigned value_class, std::uint64_t x, const CoeffTable& table)
{
    require_class(value_class);
    require_covers(table, x, "verify_bounds");
    BoundReport r{x, value_class, lower_bound(value_class, x), count_class(table, x, value_class),
                  upper_bound(value_class, x), false};
    const double observed = static_cast<double>(r.observed);
    const bool above = !r.lower || *r.lower + slack(*r.lower) < observed;
    const bool below = observed < r.upper - slack(r.upper);
    r.pass = above && below;
    return r;
}

std::vector<LowerRatioRow> lower_bound_ratios(unsigned value_class, const CoeffTable& table,
                                              std::span<const std::uint64_t> grid)
{
    if (value_class != 1 && value_class != 2) {
        throw DomainError("lower-bound ratios are defined for value classes 1 and 2");
    }
    std::vector<LowerRatioRow> rows;
    for (std::uint64_t x : grid) {
        if (x < 2) {
            throw PreconditionError("lower_bound_ratios: X must be at least 2");
        }
        require_covers(table, x, "lower_bound_ratios");
        const double X = static_cast<double>(x);
        const double scale = std::sqrt(X) / std::log(X);
        const std::uint64_t observed = count_class(table, x, value_class);
        rows.push_back({x, observed, scale, static_cast<double>(observed) / scale});
    }
    return rows;
}

ParityReport verify_parity(std::uint64_t limit, const CoeffTable& table)
{
    require_covers(table, limit, "verify_parity");
    ParityReport r{limit, {}, 0, 0.0, (1 + 1 / std::sqrt(2.0)) * std::sqrt(double(limit))};
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const bool odd = table[n] % 2 == 1;
        r.odd_count += odd;
        if (odd != (is_square(n) || is_double_square(n))) {
            r.violations.push_back(n);
        }
    }
    r.odd_density = static_cast<double>(r.odd_count) / static_cast<double>(limit);
    return r;
}

} // namespace hls
