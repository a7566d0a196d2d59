#include "hls/stats.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hls/errors.hpp"

namespace hls {

std::uint64_t Histogram::count(std::uint64_t value) const
{
    const auto it = counts.find(value);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t Histogram::total() const
{
    std::uint64_t sum = 0;
    for (const auto& [value, count] : counts) {
        sum += count;
    }
    return sum;
}

std::uint64_t Histogram::max_value() const
{
    return counts.empty() ? 0 : counts.rbegin()->first;
}

Histogram histogram(const CoeffTable& table, std::uint64_t x)
{
    require_covers(table, x, "histogram");
    Histogram hist{x, {}};
    // Dense pass first; values are tiny so this stays cache-friendly.
    std::vector<std::uint64_t> dense;
    for (std::uint64_t n = 1; n <= x; ++n) {
        const std::uint64_t v = table[n];
        if (v >= dense.size()) {
            dense.resize(v + 1, 0);
        }
        ++dense[v];
    }
    for (std::uint64_t v = 0; v < dense.size(); ++v) {
        if (dense[v] != 0) {
            hist.counts.emplace(v, dense[v]);
        }
    }
    return hist;
}

std::vector<RecordEntry> records(const CoeffTable& table, std::uint64_t limit)
{
    require_covers(table, limit, "records");
    std::vector<RecordEntry> out;
    std::uint64_t best = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (table[n] > best) {
            best = table[n];
            out.push_back({n, best});
        }
    }
    return out;
}

std::vector<CensusRow> attainment_census(const CoeffTable& table, std::uint64_t x,
                                         std::uint64_t max_value)
{
    require_covers(table, x, "attainment_census");
    std::vector<CensusRow> rows;
    rows.reserve(max_value + 1);
    for (std::uint64_t v = 0; v <= max_value; ++v) {
        rows.push_back({v, std::nullopt, 0});
    }
    for (std::uint64_t n = 1; n <= x; ++n) {
        const std::uint64_t v = table[n];
        if (v > max_value) {
            continue;
        }
        auto& row = rows[v];
        if (!row.first_n) {
            row.first_n = n;
        }
        ++row.count;
    }
    return rows;
}

Conjecture parse_conjecture(std::string_view tag)
{
    for (auto c : {Conjecture::c2, Conjecture::c3, Conjecture::c4}) {
        if (to_string(c) == tag) {
            return c;
        }
    }
    throw DomainError(fmt::format("unknown conjecture '{}'", tag));
}

std::string_view to_string(Conjecture c) noexcept
{
    switch (c) {
    case Conjecture::c2: return "c2";
    case Conjecture::c3: return "c3";
    case Conjecture::c4: return "c4";
    }
    return "?";
}

std::uint64_t conjecture_value_class(Conjecture c) noexcept
{
    switch (c) {
    case Conjecture::c2: return 0;
    case Conjecture::c3: return 2;
    case Conjecture::c4: return 1;
    }
    return 0;
}

double conjecture_main_term(Conjecture c, std::uint64_t x)
{
    const double X = static_cast<double>(x);
    const double correction = std::sqrt(X) / (2 * std::sqrt(2.0));
    switch (c) {
    case Conjecture::c2: return 3 * X / 4 - correction;
    case Conjecture::c3: return X / 4 + correction;
    case Conjecture::c4: return (1 + 1 / std::sqrt(2.0)) * std::sqrt(X);
    }
    return 0.0;
}

std::vector<FitRow> conjecture_fit(Conjecture c, const CoeffTable& table,
                                   std::span<const std::uint64_t> grid)
{
    if (grid.empty()) {
        throw PreconditionError("conjecture_fit: empty grid");
    }
    const std::uint64_t v = conjecture_value_class(c);
    std::vector<FitRow> rows;
    rows.reserve(grid.size());
    for (std::uint64_t x : grid) {
        require_covers(table, x, "conjecture_fit");
        const auto values = table.values().subspan(1, x);
        const auto observed =
            static_cast<std::uint64_t>(std::count(values.begin(), values.end(), v));
        const double predicted = conjecture_main_term(c, x);
        rows.push_back({x, observed, predicted, static_cast<double>(observed) / predicted});
    }
    return rows;
}

std::string format_value_table(const CoeffTable& table, std::span<const std::uint64_t> xs,
                               std::uint64_t max_value)
{
    std::vector<Histogram> hists;
    hists.reserve(xs.size());
    for (std::uint64_t x : xs) {
        hists.push_back(histogram(table, x));
    }
    std::string out = fmt::format("{:>6}", "h(n)");
    for (std::uint64_t x : xs) {
        out += fmt::format(" {:>10}", fmt::format("X={}", x));
    }
    out += '\n';
    for (std::uint64_t v = 0; v <= max_value; ++v) {
        out += fmt::format("{:>6}", v);
        for (const auto& h : hists) {
            out += fmt::format(" {:>10}", h.count(v));
        }
        out += '\n';
    }
    return out;
}

} // namespace hls
