#include "qwalk/walk.hpp"

#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

void require_valid(const CoinOperator& coin) {
  const CoinCheck check = validate_coin(coin);
  if (!check.valid) throw std::invalid_argument("coin is not unitary: " + check.describe());
}

}  // namespace

WalkTopology WalkTopology::circle(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("circle topology requires M >= 1");
  return {TopologyKind::Circle, m};
}

SiteAmplitudes WalkState::at(Position m) const {
  const Position offset = m - first_;
  if (offset < 0 || offset % stride() != 0) return {};
  const auto index = static_cast<std::size_t>(offset / stride());
  return index < sites_.size() ? sites_[index] : SiteAmplitudes{};
}

double WalkState::norm() const {
  long double sum = 0.0L;
  for (const auto& s : sites_) sum += std::norm(s.right) + std::norm(s.left);
  return static_cast<double>(sum);
}

WalkState initial_state(const WalkTopology& topology, Position origin, const InitialCoinState& coin) {
  require_normalized(coin);
  WalkState state;
  state.topology_ = topology;
  if (topology.kind == TopologyKind::Circle) {
    if (topology.half_size < 1) throw std::invalid_argument("circle topology requires M >= 1");
    if (origin < -topology.half_size || origin > topology.half_size) {
      std::ostringstream msg;
      msg << "origin " << origin << " outside circle range [" << -topology.half_size << ", "
          << topology.half_size << "]";
      throw std::invalid_argument(msg.str());
    }
    state.first_ = -topology.half_size;
    state.sites_.assign(static_cast<std::size_t>(topology.circle_sites()), SiteAmplitudes{});
    state.sites_[static_cast<std::size_t>(origin + topology.half_size)] = {coin.alpha, coin.beta};
  } else {
    state.first_ = origin;
    state.sites_.push_back({coin.alpha, coin.beta});
  }
  return state;
}

namespace {

// Line: old site k sits at first + 2k; new site k sits at first - 1 + 2k, so
// its left neighbour (m-1) is old k-1 and its right neighbour (m+1) is old k.
void step_line(const std::vector<SiteAmplitudes>& in, std::vector<SiteAmplitudes>& out,
               const CoinOperator& u, StepOrdering ordering) {
  const std::size_t n = in.size();
  out.assign(n + 1, SiteAmplitudes{});
  for (std::size_t k = 0; k <= n; ++k) {
    const SiteAmplitudes from_left = k > 0 ? in[k - 1] : SiteAmplitudes{};
    const SiteAmplitudes from_right = k < n ? in[k] : SiteAmplitudes{};
    if (ordering == StepOrdering::CoinAfterShift) {
      out[k].right = u.a * from_left.right + u.b * from_right.left;
      out[k].left = u.c * from_left.right + u.d * from_right.left;
    } else {
      out[k].right = u.a * from_left.right + u.b * from_left.left;
      out[k].left = u.c * from_right.right + u.d * from_right.left;
    }
  }
}

void step_circle(const std::vector<SiteAmplitudes>& in, std::vector<SiteAmplitudes>& out,
                 const CoinOperator& u, StepOrdering ordering) {
  const std::size_t n = in.size();
  out.assign(n, SiteAmplitudes{});
  for (std::size_t i = 0; i < n; ++i) {
    const SiteAmplitudes& from_left = in[(i + n - 1) % n];
    const SiteAmplitudes& from_right = in[(i + 1) % n];
    if (ordering == StepOrdering::CoinAfterShift) {
      out[i].right = u.a * from_left.right + u.b * from_right.left;
      out[i].left = u.c * from_left.right + u.d * from_right.left;
    } else {
      out[i].right = u.a * from_left.right + u.b * from_left.left;
      out[i].left = u.c * from_right.right + u.d * from_right.left;
    }
  }
}

}  // namespace

WalkState step(const WalkState& state, const CoinOperator& coin, StepOrdering ordering) {
  require_valid(coin);
  WalkState next;
  next.topology_ = state.topology_;
  next.steps_ = state.steps_ + 1;
  if (state.topology_.kind == TopologyKind::Circle) {
    next.first_ = state.first_;
    step_circle(state.sites_, next.sites_, coin, ordering);
  } else {
    next.first_ = state.first_ - 1;
    step_line(state.sites_, next.sites_, coin, ordering);
  }
  return next;
}

WalkState evolve(const WalkState& state, const CoinOperator& coin, StepOrdering ordering,
                 std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("number of steps must be non-negative");
  WalkState current = state;
  for (std::int64_t i = 0; i < steps; ++i) current = step(current, coin, ordering);
  return current;
}

ProbabilityDistribution probabilities(const WalkState& state) {
  ProbabilityDistribution dist;
  dist.steps = state.steps();
  const auto sites = state.sites();
  dist.entries.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double pr = std::norm(sites[i].right);
    const double pl = std::norm(sites[i].left);
    dist.entries.push_back({state.position_of(i), pr + pl, pr, pl});
  }
  return dist;
}

}  // namespace qwalk
