#pragma once

#include <vector>

#include "pb/functions.hpp"
#include "pb/operators.hpp"
#include "pb/reports.hpp"

namespace pb {

enum class CMode { zero, r_n };

/// How verify_kozniewska picks c for each (n, x).
enum class CSweep { zero, r_n, uniform };

struct RunOptions {
    unsigned workers = 0;  // 0: hardware concurrency
};

/// Tolerances pinned for the verification sweeps.
inline constexpr double kLemmaTolerance = 1e-13;
inline constexpr double kLemmaStrictCutoff = 1e-10;
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kPaperConstantTolerance = 1e-6;
inline constexpr double kMonotoneRelTolerance = 1e-12;

double c_of(CMode mode, int n, double x);

/// F_n^c(x): 0 for x <= 1/sqrt(n), else C(n-1,r) x^{(r+1,c)} (1-x)^{(n-r,c)} / 1^{(n,c)}
/// with r = ]nx - sqrt(n)[. Throws when (n, x, 1-x, c) is inadmissible.
double f_n_c(int n, double x, double c);

/// 1 + sqrt(n) (F_n^c(x) + F_n^c(1-x)) with one c = c(x) for both terms.
double sikkema_function(int n, double x, CMode mode);

/// Sikkema's sharper majorant 1 + sum_k ]sqrt(n)|x - k/n|[^+ p_k (binomial p_k).
/// Its sup over x is the optimal constant; used as a cross-check.
double sikkema_bracket_function(int n, double x);

/// Tail sums by direct enumeration over the pmf:
/// sum over {k : x - k/n > n^{-1/2}} of (x - k/n) p_k, and the mirror tail
/// sum over {k : k/n - x > n^{-1/2}} of (k/n - x) p_k.
double lower_tail_sum(int n, double x, double c);
double upper_tail_sum(int n, double x, double c);

/// Per-n sup of sikkema_function over build_x_grid(grid, n), with a
/// golden-section polish of interior maxima on each smooth piece.
ScanReport scan_sup(NRange range, CMode mode, const GridSpec& grid, RunOptions options = {});

/// Per-n Popoviciu ratio sups for one function and operator.
ScanReport scan_popoviciu(const FunctionSpec& f, NRange range, OperatorKind op, const GridSpec& grid,
                          int omega_resolution = 10000, RunOptions options = {});

/// Rows (n, x, value) of sikkema_function on the scan grid, for plotting.
struct CurvePoint {
    int n;
    double x;
    double value;
};
std::vector<CurvePoint> sikkema_curve(NRange range, CMode mode, const GridSpec& grid, RunOptions options = {});

/// Rising-factorial inequality: for every grid x, integer 0 <= r <= nx - sqrt(n)
/// and c on a uniform grid of c_samples points over [-min{x,1-x}/(n-1), 0],
/// ratio <= x^{r+1}(1-x)^{n-r} + 1e-13, strictly when c < -1e-10.
VerificationReport verify_lemma_claim(NRange range, const GridSpec& grid, int c_samples,
                                      RunOptions options = {});

/// Closed form vs enumeration of the truncated first moment (every r), plus
/// F_n^c(x) against the lower tail and F_n^c(1-x) against the upper tail.
VerificationReport verify_kozniewska(NRange range, const GridSpec& grid, CSweep sweep, int c_samples = 21,
                                     RunOptions options = {});

/// F_n^{c(x)}(x) <= F_n^0(x) + 1e-13 with the R_n profile.
VerificationReport verify_f_dominance(NRange range, const GridSpec& grid, RunOptions options = {});

/// n = 6 with the R_n profile, derived from the F definition:
/// sup on (1/sqrt6, 1/2], F == 0 on (1/2, 1/sqrt6 + 1/6], global sup of F, and
/// sup of 1 + sqrt6 (F(x) + F(1-x)) against fixed bounds.
VerificationReport n6_case_check(const GridSpec& grid = {});

/// Exploratory: is the ratio nondecreasing in c on [-min{x,1-x}/(n-1), c_max]?
/// Violations set `finding` and carry a witness; `passed` mirrors !finding.
VerificationReport conjecture_scan(NRange range, const GridSpec& grid, int c_grid_size, double c_max = 0.2,
                                   RunOptions options = {});

} // namespace pb
