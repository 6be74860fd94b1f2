#include "pb/operators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "pb/grid.hpp"
#include "pb/numeric_core.hpp"
#include "pb/polya.hpp"

namespace pb {

namespace {

void require_unit_x(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x", "x must lie in [0,1]");
}

void require_n(int n, int min_n) {
    if (n < min_n) throw DomainError("n", "n must be >= " + std::to_string(min_n));
}

} // namespace

CProfile CProfile::constant(double value) {
    if (!std::isfinite(value)) throw DomainError("c", "constant c-profile must be finite");
    if (value < 0.0)
        throw DomainError("c", "a constant c-profile must be >= 0 to be admissible at x = 0 and x = 1");
    return CProfile(Kind::constant, value);
}

double CProfile::at(int n, double x) const {
    switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::constant: return value_;
        case Kind::r_n:
            if (n <= 1) throw DomainError("n", "the R_n profile requires n > 1");
            return -std::min(x, 1.0 - x) / (n - 1);
    }
    return 0.0;
}

double bernstein_eval(const FunctionSpec& f, int n, double x) {
    require_n(n, 1);
    require_unit_x(x);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k)
        sum += f(static_cast<double>(k) / n) * binomial(n, k) * std::pow(x, k) * std::pow(1.0 - x, n - k);
    return sum;
}

double polya_operator_eval(const FunctionSpec& f, int n, double x, const CProfile& profile) {
    require_n(n, 1);
    require_unit_x(x);
    const double c = profile.at(n, x);
    if (x == 0.0 || x == 1.0) return f(x);

    const Pmf dist = pmf(PolyaParams{n, x, 1.0 - x, c});
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += f(static_cast<double>(k) / n) * dist[k];
    return sum;
}

double r_n_eval(const FunctionSpec& f, int n, double x) {
    require_n(n, 2);
    return polya_operator_eval(f, n, x, CProfile::r_n());
}

double operator_eval(OperatorKind op, const FunctionSpec& f, int n, double x) {
    return op == OperatorKind::bernstein ? bernstein_eval(f, n, x) : r_n_eval(f, n, x);
}

double modulus_of_continuity(const FunctionSpec& f, double delta, int resolution) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta", "delta must lie in (0,1]");
    if (resolution < 100) throw DomainError("resolution", "resolution must be >= 100");

    std::vector<double> values(static_cast<std::size_t>(resolution) + 1);
    for (int i = 0; i <= resolution; ++i) values[i] = f(static_cast<double>(i) / resolution);

    const long long window = snapped_floor(delta * resolution);
    if (window <= 0) return 0.0;

    // Monotone deques over the trailing window [i - window, i].
    std::deque<int> max_idx, min_idx;
    double best = 0.0;
    for (int i = 0; i <= resolution; ++i) {
        while (!max_idx.empty() && values[max_idx.back()] <= values[i]) max_idx.pop_back();
        while (!min_idx.empty() && values[min_idx.back()] >= values[i]) min_idx.pop_back();
        max_idx.push_back(i);
        min_idx.push_back(i);
        while (max_idx.front() < i - window) max_idx.pop_front();
        while (min_idx.front() < i - window) min_idx.pop_front();
        best = std::max(best, values[max_idx.front()] - values[min_idx.front()]);
    }
    return best;
}

ScanReport popoviciu_ratio(const FunctionSpec& f, int n, const GridSpec& grid, OperatorKind op,
                           int omega_resolution) {
    require_n(n, op == OperatorKind::r_n ? 2 : 1);
    grid.validate();
    const double omega = modulus_of_continuity(f, 1.0 / std::sqrt(static_cast<double>(n)), omega_resolution);
    if (omega <= 0.0)
        throw DomainError("fn", "Popoviciu ratio undefined: modulus of continuity is 0 (constant function)");

    ScanReport report;
    report.quantity = op == OperatorKind::bernstein ? "popoviciu/bernstein/" + f.name()
                                                    : "popoviciu/rn/" + f.name();
    report.grid = grid;
    report.argmax_n = n;
    report.sup = -1.0;
    for (double x : build_x_grid(GridSpec{grid.points, false, grid.breakpoint_offset}, 0)) {
        const double ratio = std::abs(operator_eval(op, f, n, x) - f(x)) / omega;
        if (ratio > report.sup) {
            report.sup = ratio;
            report.argmax_x = x;
        }
    }
    report.per_n.push_back({n, report.sup, report.argmax_x});
    return report;
}

} // namespace pb
