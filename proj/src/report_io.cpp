#include "pb/report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace pb {

namespace {

template <class T>
nlohmann::ordered_json optional_value(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

// Non-finite doubles serialize as null.
nlohmann::ordered_json number(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

} // namespace

nlohmann::ordered_json to_json(const GridSpec& grid) {
    return {{"points", grid.points},
            {"refine_breakpoints", grid.refine_breakpoints},
            {"breakpoint_offset", grid.breakpoint_offset}};
}

nlohmann::ordered_json to_json(const ScanReport& report) {
    nlohmann::ordered_json per_n = nlohmann::ordered_json::array();
    for (const auto& row : report.per_n)
        per_n.push_back({{"n", row.n}, {"sup", number(row.sup)}, {"argmax_x", number(row.argmax_x)}});
    return {{"schema", kReportSchema},
            {"kind", "scan"},
            {"quantity", report.quantity},
            {"sup", number(report.sup)},
            {"argmax_x", number(report.argmax_x)},
            {"argmax_n", optional_value(report.argmax_n)},
            {"grid", to_json(report.grid)},
            {"per_n", per_n}};
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    for (const auto& d : report.details)
        details.push_back(
            {{"name", d.name}, {"value", number(d.value)}, {"bound", number(d.bound)}, {"passed", d.passed}});
    return {{"schema", kReportSchema},
            {"kind", "verification"},
            {"claim_id", report.claim_id},
            {"passed", report.passed},
            {"finding", report.finding},
            {"tolerance", number(report.tolerance)},
            {"worst_margin", number(report.worst_margin)},
            {"witness",
             {{"n", optional_value(report.witness.n)},
              {"x", optional_value(report.witness.x)},
              {"c", optional_value(report.witness.c)},
              {"r", optional_value(report.witness.r)}}},
            {"samples_checked", report.samples_checked},
            {"violations", report.violations},
            {"details", details}};
}

std::string dump_report(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_double(double value, int significant_digits) {
    char buf[64];
    const auto [end, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, significant_digits);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> rows) {
    out << "n,x,value\n";
    for (const auto& row : rows) out << row.n << ',' << format_double(row.x) << ',' << format_double(row.value) << '\n';
}

} // namespace pb
