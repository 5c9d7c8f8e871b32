#pragma once

#include <cstdint>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// First two moments in walk-step units (positions are divided by the
/// distribution's resolution).
struct MomentReport {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double std_dev = 0.0;
};

/// Fair-coin binomial walk: P_m = C(n, (n+m)/2) / 2^n on sites m = n (mod 2).
/// P_R and P_L are each P/2.
ProbabilityDistribution classical_rw_distribution(std::int64_t steps);

MomentReport moments(const ProbabilityDistribution& dist);

/// Large-n moments of a walk with coin U from coin state (alpha, beta):
///
///   <x>   = [|beta|^2 - |alpha|^2 + 2 Re(a b* alpha beta*) / |a|^2] (1 - |b|) n
///   <x^2> = (1 - |b|) n^2
///
/// evaluated exactly as written. The cross term's sign disagrees with the
/// simulated drift for generic coins; see walk_asymptotic_moments for the
/// form that matches this simulator. Throws std::domain_error when |a| <= 1e-9.
///
/// The literal mean can exceed the second moment for strongly biased coins,
/// in which case `variance` is negative and `std_dev` is reported as 0.
MomentReport konno_predicted_moments(const CoinOperator& coin, const InitialCoinState& init,
                                     std::int64_t steps);

/// Large-n moments in this simulator's conventions (R moves right).
///
/// For ShiftAfterCoin the drift is
///   [|alpha|^2 - |beta|^2 + 2 Re(a b* alpha beta*) / |a|^2] (1 - |b|) n,
/// the mirror image of the classic result whose first component moves left.
/// CoinAfterShift from psi equals ShiftAfterCoin from U^dagger psi, up to a
/// final coin toss that leaves the distribution unchanged.
MomentReport walk_asymptotic_moments(const CoinOperator& coin, const InitialCoinState& init,
                                     std::int64_t steps, StepOrdering ordering);

/// Galton-coin specialization, evaluated exactly as written:
///   <x>   = [|beta|^2 - |alpha|^2 + 2 Im(alpha beta*) tan d] (1 - sin d) n
///   <x^2> = (1 - sin d) n^2
/// Throws std::domain_error when sin d >= 1 - 1e-12 or cos d vanishes.
MomentReport galton_predicted_moments(double delta, const InitialCoinState& init,
                                      std::int64_t steps);

/// Half the L1 distance over the union support. Distributions on different
/// grids are compared on their common refinement.
double total_variation(const ProbabilityDistribution& lhs, const ProbabilityDistribution& rhs);

}  // namespace qwalk
