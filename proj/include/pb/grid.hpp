#pragma once

#include <vector>

#include "pb/reports.hpp"

namespace pb {

/// Nudges p by at most an ulp so that 1 - p is exact and 1 - (1 - p) == p.
double mirror_snap(double p) noexcept;

/// Breakpoints of r(x) = ]nx - sqrt(n)[ and of r(1-x) inside [0,1]:
/// 1/sqrt(n) + k/n and their mirrors.
std::vector<double> r_breakpoints(int n);

/// Sorted, de-duplicated scan points. Every point is mirror-snapped and its
/// mirror is also present. With refine_breakpoints and n > 1, each breakpoint
/// b contributes b - offset, b, b + offset, and x = 1/2 is included.
std::vector<double> build_x_grid(const GridSpec& grid, int n);

} // namespace pb
