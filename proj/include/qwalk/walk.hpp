#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk {

enum class TopologyKind { Line, Circle };

/// Line, or a circle of 2M+1 sites indexed -M..+M.
struct WalkTopology {
  TopologyKind kind = TopologyKind::Line;
  std::int64_t half_size = 0;  // M; circle only

  static WalkTopology line() { return {}; }
  static WalkTopology circle(std::int64_t m);

  std::int64_t circle_sites() const { return 2 * half_size + 1; }
};

enum class StepOrdering {
  CoinAfterShift,  // U V: shift, then toss the coin
  ShiftAfterCoin,  // V U: toss the coin, then shift
};

struct SiteAmplitudes {
  Amplitude right;  // R_m, moves to m+1
  Amplitude left;   // L_m, moves to m-1
};

/// Exact walk state after `steps()` steps.
///
/// Storage is dense over the reachable sites. On the line only sites with
/// the parity of (origin + n) are allocated, so the other parity is
/// structurally zero; the circle stores every site.
class WalkState {
 public:
  const WalkTopology& topology() const { return topology_; }
  std::int64_t steps() const { return steps_; }

  /// Position of sites()[0].
  Position first_position() const { return first_; }
  /// Distance between consecutive allocated sites (2 on the line, 1 on the circle).
  std::int64_t stride() const { return topology_.kind == TopologyKind::Line ? 2 : 1; }
  Position position_of(std::size_t index) const {
    return first_ + static_cast<Position>(index) * stride();
  }

  std::span<const SiteAmplitudes> sites() const { return sites_; }

  /// Amplitudes at m, zero for unallocated sites.
  SiteAmplitudes at(Position m) const;

  /// Sum of |R|^2 + |L|^2.
  double norm() const;

 private:
  friend WalkState initial_state(const WalkTopology&, Position, const InitialCoinState&);
  friend WalkState step(const WalkState&, const CoinOperator&, StepOrdering);

  WalkTopology topology_;
  std::int64_t steps_ = 0;
  Position first_ = 0;
  std::vector<SiteAmplitudes> sites_;
};

/// Walker localized at `origin` with coin state (alpha, beta). Throws
/// std::invalid_argument when the coin state is not normalized or the
/// origin lies outside the circle.
WalkState initial_state(const WalkTopology& topology, Position origin, const InitialCoinState& coin);

/// One step: R'_m = a R_{m-1} + b L_{m+1}, L'_m = c R_{m-1} + d L_{m+1} for
/// CoinAfterShift; the coin acts before the displacement for ShiftAfterCoin.
/// Circle positions wrap M+1 -> -M and -M-1 -> M.
WalkState step(const WalkState& state, const CoinOperator& coin, StepOrdering ordering);

WalkState evolve(const WalkState& state, const CoinOperator& coin, StepOrdering ordering,
                 std::int64_t steps);

/// P_m = |R_m|^2 + |L_m|^2 with both marginals, one entry per allocated site.
ProbabilityDistribution probabilities(const WalkState& state);

}  // namespace qwalk
