#include "pb/numeric_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pb {

RealInterval::RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("interval", "interval endpoints must be finite");
    if (lo > hi) throw DomainError("interval", "interval requires lo <= hi");
}

double rising_factorial(double x, int n, double h) {
    if (n < 0) throw DomainError("n", "rising_factorial: n must be non-negative");
    double product = 1.0;
    for (int i = 0; i < n; ++i) {
        const double factor = increment_factor(x, i, h);
        if (factor == 0.0) return 0.0;
        product *= factor;
    }
    return product;
}

double increment_factor(double u, int i, double c) noexcept {
    const double step = static_cast<double>(i) * c;
    const double sum = u + step;
    const double scale = std::max(std::abs(u), std::abs(step));
    if (std::abs(sum) <= 4.0 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
    return sum;
}

double default_snap_eps(double a) noexcept { return 1e-12 * std::max(1.0, std::abs(a)); }

BracketInt strict_floor_bracket(double a, double eps) {
    const double nearest = std::nearbyint(a);
    if (std::abs(a - nearest) <= eps) return {static_cast<long long>(nearest) - 1};
    return {static_cast<long long>(std::floor(a))};
}

BracketInt strict_floor_bracket(double a) { return strict_floor_bracket(a, default_snap_eps(a)); }

long long snapped_floor(double a, double eps) {
    const double nearest = std::nearbyint(a);
    if (std::abs(a - nearest) <= eps) return static_cast<long long>(nearest);
    return static_cast<long long>(std::floor(a));
}

long long snapped_floor(double a) { return snapped_floor(a, default_snap_eps(a)); }

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int j = 1; j <= k; ++j) result = result * static_cast<double>(n - k + j) / j;
    return result;
}

double factorial_ratio(double x, int r, int n, double c) {
    return factorial_ratio(x, 1.0 - x, r, n, c);
}

double factorial_ratio(double x, double x_complement, int r, int n, double c) {
    if (n < 1) throw DomainError("n", "factorial_ratio: n must be >= 1");
    if (r < 0 || r > n - 1) throw DomainError("r", "factorial_ratio: r must lie in 0..n-1");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x", "factorial_ratio: x must lie in [0,1]");
    if (!std::isfinite(c)) throw DomainError("c", "factorial_ratio: c must be finite");

    // Numerator factors in order: x + i c (i = 0..r), then (1-x) + i c (i = 0..n-r-1).
    auto numerator = [&](int j) {
        return j <= r ? increment_factor(x, j, c) : increment_factor(x_complement, j - r - 1, c);
    };

    double result = 1.0;
    for (int j = 0; j < n; ++j) {
        const double den = increment_factor(1.0, j, c);
        if (den == 0.0)
            throw DomainError("c", "factorial_ratio: denominator factor 1 + i c vanishes");
        result *= numerator(j) / den;
    }
    return result * numerator(n);
}

double power_product(double base, int p, double other, int q) noexcept {
    double result = 1.0;
    for (int i = 0; i < p; ++i) result *= base;
    for (int i = 0; i < q; ++i) result *= other;
    return result;
}

} // namespace pb
