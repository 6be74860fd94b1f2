#pragma once

#include "pb/functions.hpp"
#include "pb/reports.hpp"

namespace pb {

/// Replacement increment as a function of x: zero (Bernstein), the R_n profile
/// -min{x,1-x}/(n-1), or a fixed constant.
class CProfile {
public:
    enum class Kind { zero, r_n, constant };

    static CProfile zero() { return CProfile(Kind::zero, 0.0); }
    static CProfile r_n() { return CProfile(Kind::r_n, 0.0); }
    /// Admissible at every x in [0,1] only for value >= 0 (x = 0 forces it).
    static CProfile constant(double value);

    Kind kind() const noexcept { return kind_; }
    double value() const noexcept { return value_; }
    double at(int n, double x) const;

private:
    CProfile(Kind kind, double value) : kind_(kind), value_(value) {}
    Kind kind_;
    double value_;
};

enum class OperatorKind { bernstein, r_n };

/// sum_k f(k/n) C(n,k) x^k (1-x)^{n-k}.
double bernstein_eval(const FunctionSpec& f, int n, double x);

/// E f(X/n) with X ~ Polya(n, x, 1-x, c(x)). Point mass at x in {0,1}.
double polya_operator_eval(const FunctionSpec& f, int n, double x, const CProfile& profile);

/// R_n(f; x); requires n > 1.
double r_n_eval(const FunctionSpec& f, int n, double x);

double operator_eval(OperatorKind op, const FunctionSpec& f, int n, double x);

/// Grid modulus of continuity: max |f(u) - f(v)| over nodes of the uniform
/// (resolution+1)-point grid with |u - v| <= delta. Sliding-window extrema,
/// O(resolution). Under-estimates the true modulus.
double modulus_of_continuity(const FunctionSpec& f, double delta, int resolution = 10000);

/// sup over the grid of |Op(f;x) - f(x)| / omega(n^{-1/2}). Throws for constant f.
ScanReport popoviciu_ratio(const FunctionSpec& f, int n, const GridSpec& grid, OperatorKind op,
                           int omega_resolution = 10000);

} // namespace pb
