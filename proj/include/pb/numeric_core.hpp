#pragma once

#include <stdexcept>
#include <string>

namespace pb {

/// Raised when an argument violates an operation's domain (bad n, x outside
/// [0,1], inadmissible urn parameters, ...). `field()` names the offending
/// input so front ends can report it.
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, const std::string& what)
        : std::invalid_argument(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Closed interval [lo, hi] with finite endpoints.
class RealInterval {
public:
    RealInterval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    static RealInterval unit() { return {0.0, 1.0}; }

private:
    double lo_;
    double hi_;
};

/// Result of the strict-floor bracket ]a[: the unique integer k with k < a <= k+1.
struct BracketInt {
    long long value;
    friend bool operator==(BracketInt, BracketInt) = default;
};

/// x (x+h) (x+2h) ... (x+(n-1)h); 1 when n == 0. Zero factors give an exact 0.
/// May overflow to +-inf for extreme arguments.
double rising_factorial(double x, int n, double h);

/// u + i*c, snapped to exactly 0 when the sum cancels down to rounding
/// residue (|u + i c| <= 4 eps max(|u|, |i c|)). Keeps the exact zeros of the
/// admissibility boundary, e.g. x + (n-1)(-x/(n-1)).
double increment_factor(double u, int i, double c) noexcept;

/// Default integer-snap tolerance: 1e-12 * max(1, |a|).
double default_snap_eps(double a) noexcept;

/// ]a[ with integer snapping: values within eps of an integer m give m-1.
BracketInt strict_floor_bracket(double a, double eps);
BracketInt strict_floor_bracket(double a);

/// floor(a), except that values within eps of an integer m give m.
/// Used for "largest integer r <= a".
long long snapped_floor(double a, double eps);
long long snapped_floor(double a);

/// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(int n, int k);

/// x^{(r+1,c)} (1-x)^{(n-r,c)} / 1^{(n,c)}.
///
/// Numerator factor j is paired with denominator factor 1 + j c so partial
/// products stay near 1; the one unpaired numerator factor goes last. With
/// c == 0 the result is bit-identical to power_product(x, r + 1, 1 - x, n - r).
///
/// Requires 0 <= x <= 1, n >= 1, 0 <= r <= n-1; throws DomainError when some
/// 1 + i c vanishes.
double factorial_ratio(double x, int r, int n, double c);

/// Same, with the complement 1-x supplied by the caller (grid code keeps
/// mirrored pairs bit-exact this way).
double factorial_ratio(double x, double x_complement, int r, int n, double c);

/// base^p * other^q by repeated multiplication in that order.
double power_product(double base, int p, double other, int q) noexcept;

} // namespace pb
