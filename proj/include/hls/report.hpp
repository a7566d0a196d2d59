#pragma once

// JSON and CSV renderings of every result type. JSON field names follow the
// struct fields; exact big integers are emitted as decimal strings.

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "hls/hcoeff.hpp"
#include "hls/qseries.hpp"
#include "hls/stats.hpp"
#include "hls/theorems.hpp"

namespace hls {

void to_json(nlohmann::json& j, const RepCounts& r);
void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const StructuralReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const LowerRatioRow& r);
void to_json(nlohmann::json& j, const ParityReport& r);
void to_json(nlohmann::json& j, const Histogram& h);
void to_json(nlohmann::json& j, const RecordEntry& r);
void to_json(nlohmann::json& j, const CensusRow& r);
void to_json(nlohmann::json& j, const FitRow& r);
void to_json(nlohmann::json& j, const Series& s);

/// Fixed-precision rendering used in CSV and text output.
std::string format_real(double v);

void write_series_csv(const Series& s, std::ostream& out);          // n,coeff
void write_histogram_csv(const Histogram& h, std::ostream& out);    // value,count
void write_fit_csv(std::span<const FitRow> rows, std::ostream& out); // X,observed,predicted,ratio
void write_records_csv(std::span<const RecordEntry> rows, std::ostream& out); // n,value

} // namespace hls
