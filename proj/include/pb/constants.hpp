#pragma once

namespace pb::constants {

/// Sikkema's optimal Popoviciu constant for B_n, (4306 + 837 sqrt 6) / 5832.
inline constexpr double kSikkemaOptimal = 1.0898873310544444561;
/// Uniform bound on 1 + sqrt(n)(F_n^0(x) + F_n^0(1-x)) for n != 6.
inline constexpr double kSikkemaEstimate = 1.0897;
/// Popoviciu constant bound for R_n.
inline constexpr double kRnConstantBound = 1.08970;

/// n = 6 case, r-n profile.
inline constexpr double kN6FirstPieceBound = 0.0072167344302512298;  // (193282 - 78887 sqrt 6) / 6804
inline constexpr double kN6FBound = 0.014271;
inline constexpr double kN6SikkemaBound = 1.0699134;  // 1 + 2 sqrt(6) * 0.014271, rounded

} // namespace pb::constants
