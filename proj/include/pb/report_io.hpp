#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"
#include "pb/analysis.hpp"
#include "pb/reports.hpp"

namespace pb {

/// Version of the JSON layout written by the serializers below.
inline constexpr int kReportSchema = 1;

nlohmann::ordered_json to_json(const GridSpec& grid);
nlohmann::ordered_json to_json(const ScanReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Pretty-printed with a trailing newline. Byte-stable for equal inputs.
std::string dump_report(const nlohmann::ordered_json& doc);

/// Shortest round-trip decimal ("C" locale regardless of the global locale).
std::string format_double(double value);
/// %.<digits>g-style, trailing zeros dropped.
std::string format_double(double value, int significant_digits);

/// `n,x,value` rows.
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> rows);

} // namespace pb
