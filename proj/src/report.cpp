#include "hls/report.hpp"

#include <ostream>

#include <fmt/format.h>

namespace hls {

using nlohmann::json;

void to_json(json& j, const RepCounts& r)
{
    j = json{{"n", r.n}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"h", r.h}};
}

void to_json(json& j, const Violation& v)
{
    j = json{{"n", v.n}, {"expected", v.expected}, {"observed", v.observed}};
}

void to_json(json& j, const StructuralReport& r)
{
    const auto& info = family_info(r.family);
    j = json{{"family", info.tag},
             {"description", info.description},
             {"expected_value", info.expected_value},
             {"limit", r.limit},
             {"members_checked", r.members_checked},
             {"violations", r.violations},
             {"pass", r.ok()}};
}

void to_json(json& j, const BoundReport& r)
{
    j = json{{"X", r.x},
             {"value_class", r.value_class},
             {"lower", r.lower ? json(*r.lower) : json(nullptr)},
             {"observed", r.observed},
             {"upper", r.upper},
             {"pass", r.pass}};
}

void to_json(json& j, const LowerRatioRow& r)
{
    j = json{{"X", r.x}, {"observed", r.observed}, {"scale", r.scale}, {"ratio", r.ratio}};
}

void to_json(json& j, const ParityReport& r)
{
    j = json{{"limit", r.limit},
             {"violations", r.violations},
             {"odd_count", r.odd_count},
             {"odd_density", r.odd_density},
             {"predicted_odd_count", r.predicted_odd_count},
             {"pass", r.ok()}};
}

void to_json(json& j, const Histogram& h)
{
    json counts = json::object();
    for (const auto& [value, count] : h.counts) {
        counts[std::to_string(value)] = count;
    }
    j = json{{"X", h.x}, {"counts", counts}};
}

void to_json(json& j, const RecordEntry& r)
{
    j = json{{"n", r.n}, {"value", r.value}};
}

void to_json(json& j, const CensusRow& r)
{
    j = json{{"value", r.value},
             {"first_n", r.first_n ? json(*r.first_n) : json(nullptr)},
             {"count", r.count}};
}

void to_json(json& j, const FitRow& r)
{
    j = json{{"X", r.x}, {"observed", r.observed}, {"predicted", r.predicted}, {"ratio", r.ratio}};
}

void to_json(json& j, const Series& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    j = json{{"order", s.order()}, {"coeffs", coeffs}};
}

std::string format_real(double v)
{
    return fmt::format("{:.6f}", v);
}

void write_series_csv(const Series& s, std::ostream& out)
{
    out << "n,coeff\n";
    const auto coeffs = s.coeffs();
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out << n << ',' << coeffs[n].get_str() << '\n';
    }
}

void write_histogram_csv(const Histogram& h, std::ostream& out)
{
    out << "value,count\n";
    for (const auto& [value, count] : h.counts) {
        out << value << ',' << count << '\n';
    }
}

void write_fit_csv(std::span<const FitRow> rows, std::ostream& out)
{
    out << "X,observed,predicted,ratio\n";
    for (const auto& r : rows) {
        out << r.x << ',' << r.observed << ',' << format_real(r.predicted) << ','
            << format_real(r.ratio) << '\n';
    }
}

void write_records_csv(std::span<const RecordEntry> rows, std::ostream& out)
{
    out << "n,value\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.value << '\n';
    }
}

} // namespace hls
