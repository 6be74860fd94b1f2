#include "pb/reports.hpp"

#include <charconv>

#include "pb/numeric_core.hpp"

namespace pb {

namespace {

int parse_int(std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw DomainError("n", "cannot parse integer '" + std::string(text) + "'");
    return value;
}

} // namespace

NRange NRange::parse(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int n = parse_int(text);
        return {n, n};
    }
    NRange range{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (range.lo > range.hi) throw DomainError("n", "range '" + std::string(text) + "' is empty");
    return range;
}

void GridSpec::validate(int min_points) const {
    if (points < min_points)
        throw DomainError("points", "grid needs at least " + std::to_string(min_points) + " points");
    if (!(breakpoint_offset > 0.0 && breakpoint_offset <= 1e-6))
        throw DomainError("offset", "breakpoint offset must lie in (0, 1e-6]");
}

} // namespace pb
