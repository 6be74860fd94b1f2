#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pb/numeric_core.hpp"

namespace pb {

/// Parameters of the Polya-Eggenberger law X_n^{a,b,c}: n draws from an urn
/// with white weight a, black weight b, and replacement increment c.
struct PolyaParams {
    int n = 1;
    double a = 0.5;
    double b = 0.5;
    double c = 0.0;
};

/// Boundary slack (relative to a+b) accepted on a + (n-1)c >= 0 and
/// b + (n-1)c >= 0. R_n sits exactly on that boundary.
inline constexpr double kAdmissibilitySlack = 1e-14;

class InadmissibleParams : public DomainError {
public:
    using DomainError::DomainError;
};

/// Describes the first violated constraint, or nullopt when admissible.
std::optional<std::string> admissibility_problem(const PolyaParams& params);

/// Throws InadmissibleParams naming the violated inequality and its slack.
void validate(const PolyaParams& params);

/// Probabilities P(X = k), k = 0..n.
struct Pmf {
    std::vector<double> probabilities;

    double operator[](std::size_t k) const { return probabilities[k]; }
    std::size_t size() const noexcept { return probabilities.size(); }
    double total() const noexcept;
    double mean() const noexcept;
    double variance() const noexcept;
};

/// C(n,k) a^{(k,c)} b^{(n-k,c)} / (a+b)^{(n,c)}, evaluated after rescaling to
/// a+b = 1 with interleaved factors. Entries are clamped to [0,1]; the vector
/// is not renormalized.
Pmf pmf(const PolyaParams& params);

struct Moments {
    double mean;
    double variance;
};

/// mean = n a/(a+b), variance = n a b/(a+b)^2 (1 + (n-1)c/(a+b+c)).
/// Throws when a+b+c == 0.
Moments moments(const PolyaParams& params);

/// (1/n) sum_{k=0}^{r} (n a - k) p_k for a+b = 1, via the closed form
/// C(n-1,r) a^{(r+1,c)} b^{(n-r,c)} / 1^{(n,c)}.
double truncated_first_moment(const PolyaParams& params, int r);

/// The same quantity as a literal sum over the pmf.
double truncated_first_moment_direct(const PolyaParams& params, int r);

} // namespace pb
