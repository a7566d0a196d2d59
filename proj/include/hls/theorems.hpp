#pragma once

// Executable forms of the structural, counting-bound and parity results on h(n).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hls/hcoeff.hpp"

namespace hls {

enum class Family {
    t1_2,            ///< p^d, p odd prime, d odd -> 0
    t1_3,            ///< p1...pk distinct odd primes, k >= 2, pk > 2 p1...p(k-1) -> 0
    t2_2,            ///< 2^k, k >= 1 -> 1
    t2_3,            ///< p^(2k), p odd prime -> 1
    t2_4,            ///< p1^2 p2^2, odd primes, p2 > sqrt(2) p1 -> 1
    t2_4_as_printed, ///< p1^2 p2^2, odd primes, p1 != p2, p2 > sqrt(p1) -> 1 (false in general)
    t3_2,            ///< p1 p2, odd primes, p1 < p2 < 2 p1 -> 2
    t3_3,            ///< p(p+1) or (p-1)p, p odd prime -> 2
    t4,              ///< p1^2 p2^2, odd primes, p1 < p2 < sqrt(2) p1 -> 3
};

struct TheoremFamily {
    Family id;
    std::string_view tag; ///< "1.2", "2.4", "4", ...
    std::string_view description;
    std::uint64_t expected_value;
};

const TheoremFamily& family_info(Family id);

/// The families checked by a full verification run. t2_4_as_printed is
/// excluded: it is a known-false variant kept for diagnostics.
std::span<const Family> all_families() noexcept;

/// Accepts a family tag ("1.2", "2.4-printed", "4", ...); throws DomainError otherwise.
Family parse_family(std::string_view tag);

/// Every member n <= limit, ascending, generated from primes.
std::vector<std::uint64_t> family_members(Family id, std::uint64_t limit);

struct Violation {
    std::uint64_t n;
    std::uint64_t expected;
    std::uint64_t observed;
};

struct StructuralReport {
    Family family;
    std::uint64_t limit;
    std::uint64_t members_checked;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks every family member <= limit, evaluating h pointwise with classify.
/// Throws PreconditionError when limit < 2.
StructuralReport verify_structural(Family id, std::uint64_t limit);

/// Same, reading h from a table that must cover limit.
StructuralReport verify_structural(Family id, std::uint64_t limit, const CoeffTable& table);

/// Slack applied against every explicit counting bound.
inline constexpr double kBoundSlack = 1e-9;

struct BoundReport {
    std::uint64_t x;
    unsigned value_class;
    std::optional<double> lower; ///< absent for the implicit-constant lower bounds
    std::uint64_t observed;
    double upper;
    bool pass;
};

/// Explicit counting bounds for #{1 <= n <= X : h(n) = v}, v in {0, 1, 2}.
/// Throws DomainError for other classes, PreconditionError when X is not covered.
BoundReport verify_bounds(unsigned value_class, std::uint64_t x, const CoeffTable& table);

/// The explicit bounds alone, for a given X.
std::optional<double> lower_bound(unsigned value_class, std::uint64_t x);
double upper_bound(unsigned value_class, std::uint64_t x);

struct LowerRatioRow {
    std::uint64_t x;
    std::uint64_t observed;
    double scale; ///< sqrt(X) / log X
    double ratio; ///< observed / scale
};

/// observed / (sqrt(X)/log X) for classes 1 and 2 over a grid (every X >= 2).
std::vector<LowerRatioRow> lower_bound_ratios(unsigned value_class, const CoeffTable& table,
                                              std::span<const std::uint64_t> grid);

struct ParityReport {
    std::uint64_t limit;
    std::vector<std::uint64_t> violations;
    std::uint64_t odd_count;
    double odd_density;
    double predicted_odd_count; ///< (1 + 1/sqrt 2) sqrt(X)

    bool ok() const noexcept { return violations.empty(); }
};

/// h(n) odd iff n is a square or twice a square, for every 1 <= n <= limit.
ParityReport verify_parity(std::uint64_t limit, const CoeffTable& table);

} // namespace hls
