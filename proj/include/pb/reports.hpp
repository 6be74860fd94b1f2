#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pb {

/// Inclusive integer range lo..hi.
struct NRange {
    int lo;
    int hi;

    /// Parses "lo..hi" or a single integer.
    static NRange parse(std::string_view text);
    bool contains(int n) const noexcept { return lo <= n && n <= hi; }
    int count() const noexcept { return hi - lo + 1; }
};

/// Deterministic x-grid on [0,1]: `points` uniform nodes (endpoints included),
/// optionally augmented with one-sided samples around the jumps of r(x).
struct GridSpec {
    int points = 10001;
    bool refine_breakpoints = true;
    double breakpoint_offset = 1e-9;

    /// Throws DomainError unless points >= min_points and the offset is in (0, 1e-6].
    void validate(int min_points = 2) const;
};

struct PerNSup {
    int n;
    double sup;
    double argmax_x;
};

struct ScanReport {
    std::string quantity;
    double sup = 0.0;
    double argmax_x = 0.0;
    std::optional<int> argmax_n;
    GridSpec grid;
    std::vector<PerNSup> per_n;
};

struct Witness {
    std::optional<int> n;
    std::optional<double> x;
    std::optional<double> c;
    std::optional<int> r;
};

/// Named sub-result of a composite check.
struct CheckDetail {
    std::string name;
    double value;
    double bound;
    bool passed;
};

/// passed <=> violations == 0. For plain tolerance checks that is the same as
/// worst_margin >= -tolerance.
struct VerificationReport {
    std::string claim_id;
    bool passed = true;
    double tolerance = 0.0;
    double worst_margin = 0.0;
    Witness witness;
    long long samples_checked = 0;
    long long violations = 0;
    bool finding = false;
    std::vector<CheckDetail> details;
};

} // namespace pb
