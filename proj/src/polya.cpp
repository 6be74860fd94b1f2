#include "pb/polya.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pb {

namespace {

std::string format_slack(const char* inequality, double value) {
    std::ostringstream out;
    out.precision(17);
    out << inequality << " violated (value " << value << ")";
    return out.str();
}

void require_unit_mass(const PolyaParams& params) {
    if (std::abs(params.a + params.b - 1.0) > 1e-12)
        throw DomainError("a", "truncated first moment requires a + b = 1");
}

void require_r(const PolyaParams& params, int r) {
    if (r < 0 || r > params.n - 1)
        throw DomainError("r", "truncated first moment requires r in 0..n-1");
}

} // namespace

std::optional<std::string> admissibility_problem(const PolyaParams& p) {
    if (p.n < 1) return "n >= 1 violated";
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
        return "parameters must be finite";
    if (p.a < 0.0) return format_slack("a >= 0", p.a);
    if (p.b < 0.0) return format_slack("b >= 0", p.b);
    if (!(p.a + p.b > 0.0)) return "a + b > 0 violated";

    const double slack = -kAdmissibilitySlack * (p.a + p.b);
    const double tail = static_cast<double>(p.n - 1) * p.c;
    if (p.a + tail < slack) return format_slack("a + (n-1)c >= 0", p.a + tail);
    if (p.b + tail < slack) return format_slack("b + (n-1)c >= 0", p.b + tail);
    return std::nullopt;
}

void validate(const PolyaParams& params) {
    if (auto problem = admissibility_problem(params)) {
        const char* field = problem->rfind("n ", 0) == 0 ? "n" : "c";
        throw InadmissibleParams(field, "inadmissible Polya parameters: " + *problem);
    }
}

double Pmf::total() const noexcept {
    double sum = 0.0;
    for (double p : probabilities) sum += p;
    return sum;
}

double Pmf::mean() const noexcept {
    double sum = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) sum += static_cast<double>(k) * probabilities[k];
    return sum;
}

double Pmf::variance() const noexcept {
    const double mu = mean();
    double sum = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        const double d = static_cast<double>(k) - mu;
        sum += d * d * probabilities[k];
    }
    return sum;
}

Pmf pmf(const PolyaParams& params) {
    validate(params);
    const int n = params.n;
    const double scale = params.a + params.b;
    const double a = params.a / scale;
    const double b = params.b / scale;
    const double c = params.c / scale;

    std::vector<double> denominators(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        denominators[j] = increment_factor(1.0, j, c);
        if (denominators[j] == 0.0)
            throw DomainError("c", "pmf: denominator factor (a+b) + i c vanishes");
    }

    Pmf result;
    result.probabilities.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double value = 1.0;
        for (int j = 0; j < n; ++j) {
            const double num = j < k ? increment_factor(a, j, c) : increment_factor(b, j - k, c);
            value *= num / denominators[j];
        }
        value *= binomial(n, k);
        result.probabilities[k] = std::clamp(value, 0.0, 1.0);
    }
    return result;
}

Moments moments(const PolyaParams& params) {
    validate(params);
    const double s = params.a + params.b;
    if (s + params.c == 0.0) throw DomainError("c", "moments: a + b + c = 0 makes the variance singular");
    const double n = params.n;
    const double mean = n * params.a / s;
    const double variance =
        n * params.a * params.b / (s * s) * (1.0 + (n - 1.0) * params.c / (s + params.c));
    return {mean, variance};
}

double truncated_first_moment(const PolyaParams& params, int r) {
    require_unit_mass(params);
    require_r(params, r);
    validate(params);
    return binomial(params.n - 1, r) * factorial_ratio(params.a, params.b, r, params.n, params.c);
}

double truncated_first_moment_direct(const PolyaParams& params, int r) {
    require_unit_mass(params);
    require_r(params, r);
    const Pmf dist = pmf(params);
    const double n = params.n;
    double sum = 0.0;
    for (int k = 0; k <= r; ++k) sum += (params.a - k / n) * dist[k];
    return sum;
}

} // namespace pb
