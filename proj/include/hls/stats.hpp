#pragma once

// Value distribution of h(n): histograms, record values, and comparison of
// observed counts with conjectured main terms.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hls/hcoeff.hpp"

namespace hls {

struct Histogram {
    std::uint64_t x = 0;
    std::map<std::uint64_t, std::uint64_t> counts; ///< value -> count; absent means 0

    std::uint64_t count(std::uint64_t value) const;
    std::uint64_t total() const;
    std::uint64_t max_value() const;
};

/// Exact per-value counts over h(1..X).
Histogram histogram(const CoeffTable& table, std::uint64_t x);

struct RecordEntry {
    std::uint64_t n;
    std::uint64_t value;

    friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

/// Every n <= limit where h(n) exceeds all earlier h(m), m >= 1.
std::vector<RecordEntry> records(const CoeffTable& table, std::uint64_t limit);

struct CensusRow {
    std::uint64_t value;
    std::optional<std::uint64_t> first_n; ///< smallest n <= X with h(n) = value
    std::uint64_t count;
};

/// For every value 0..max_value: where it first occurs and how often, up to X.
std::vector<CensusRow> attainment_census(const CoeffTable& table, std::uint64_t x,
                                         std::uint64_t max_value = 32);

enum class Conjecture {
    c2, ///< #{h = 0} ~ 3X/4 - sqrt(X)/(2 sqrt 2)
    c3, ///< #{h = 2} ~ X/4 + sqrt(X)/(2 sqrt 2)
    c4, ///< #{h = 1} ~ (1 + 1/sqrt 2) sqrt(X)
};

/// "c2", "c3", "c4"; throws DomainError otherwise.
Conjecture parse_conjecture(std::string_view tag);
std::string_view to_string(Conjecture c) noexcept;
std::uint64_t conjecture_value_class(Conjecture c) noexcept;
double conjecture_main_term(Conjecture c, std::uint64_t x);

struct FitRow {
    std::uint64_t x;
    std::uint64_t observed;
    double predicted;
    double ratio;
};

/// One row per grid point. Throws PreconditionError on an empty grid or a
/// grid point beyond the table.
std::vector<FitRow> conjecture_fit(Conjecture c, const CoeffTable& table,
                                   std::span<const std::uint64_t> grid);

/// Columns of the published value-distribution table.
inline constexpr std::uint64_t kTable1Columns[] = {1000, 5000, 10000, 20000, 50000, 100000};
inline constexpr std::uint64_t kTable1MaxValue = 16;

/// Plain-text grid, one row per value 0..max_value, one column per X.
std::string format_value_table(const CoeffTable& table, std::span<const std::uint64_t> xs,
                               std::uint64_t max_value = kTable1MaxValue);

} // namespace hls
