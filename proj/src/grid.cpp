#include "pb/grid.hpp"

#include <algorithm>
#include <cmath>

namespace pb {

double mirror_snap(double p) noexcept {
    // For y in [1/2, 1], 1 - y is exact, so a value of the form 1 - y mirrors exactly.
    if (p <= 0.5) return 1.0 - (1.0 - p);
    const double q = 1.0 - p;
    return 1.0 - (1.0 - (1.0 - q));
}

std::vector<double> r_breakpoints(int n) {
    std::vector<double> out;
    if (n < 2) return out;
    const double root = std::sqrt(static_cast<double>(n));
    for (int k = 0;; ++k) {
        const double b = 1.0 / root + static_cast<double>(k) / n;
        if (b > 1.0) break;
        out.push_back(b);
        out.push_back(1.0 - b);
    }
    return out;
}

std::vector<double> build_x_grid(const GridSpec& grid, int n) {
    std::vector<double> raw;
    const int intervals = std::max(1, grid.points - 1);
    raw.reserve(static_cast<std::size_t>(grid.points) + 8 * static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= intervals; ++i) raw.push_back(static_cast<double>(i) / intervals);

    if (grid.refine_breakpoints && n > 1) {
        raw.push_back(0.5);
        for (double b : r_breakpoints(n))
            for (double p : {b - grid.breakpoint_offset, b, b + grid.breakpoint_offset})
                if (p >= 0.0 && p <= 1.0) raw.push_back(p);
    }

    std::vector<double> out;
    out.reserve(2 * raw.size());
    for (double p : raw) {
        const double s = mirror_snap(p);
        out.push_back(s);
        out.push_back(1.0 - s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pb
