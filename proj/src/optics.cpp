#include "qwalk/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qwalk::optics {

// Internal access to FieldState's private constructor.
class FieldBuilder {
 public:
  static FieldState make(CebitKind kind, std::int64_t grid, std::int64_t roundtrips, Position first,
                         std::vector<CebitAmplitudes> amps) {
    return FieldState(kind, grid, roundtrips, first, std::move(amps));
  }
  static FieldState with_roundtrips(FieldState state, std::int64_t roundtrips) {
    state.roundtrips_ = roundtrips;
    return state;
  }
};

namespace {

constexpr double kPi = std::numbers::pi;

CebitAmplitudes mix(const CoinOperator& m, const CebitAmplitudes& v) {
  return {m.a * v.c1 + m.b * v.c2, m.c * v.c1 + m.d * v.c2};
}

// R(t) = [[cos t, sin t], [-sin t, cos t]]
CoinOperator rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, -s, c};
}

FieldState apply_matrix(const FieldState& state, const CoinOperator& m) {
  std::vector<CebitAmplitudes> out(state.amplitudes().begin(), state.amplitudes().end());
  for (auto& v : out) v = mix(m, v);
  return FieldBuilder::make(state.cebit(), state.grid_per_step(), state.roundtrips(),
                            state.first_index(), std::move(out));
}

FieldState apply_ring_shift(const FieldState& state, const FrequencyRing& ring, int shift_c1,
                            int shift_c2) {
  if (ring.size() < 1) throw std::invalid_argument("EOM-bar ring must contain at least one index");
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Position k = state.first_index() + static_cast<Position>(i);
    if (!ring.contains(k) && (std::norm(amps[i].c1) > 0.0 || std::norm(amps[i].c2) > 0.0)) {
      std::ostringstream msg;
      msg << "field at frequency index " << k << " lies outside the EOM-bar range ["
          << ring.lowest << ", " << ring.highest << "]";
      throw std::invalid_argument(msg.str());
    }
  }
  const std::int64_t size = ring.size();
  auto wrap = [&](Position k, int shift) {
    return ((k - ring.lowest + shift) % size + size) % size;
  };
  std::vector<CebitAmplitudes> out(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Position k = state.first_index() + static_cast<Position>(i);
    if (!ring.contains(k)) continue;
    out[static_cast<std::size_t>(wrap(k, shift_c1))].c1 = amps[i].c1;
    out[static_cast<std::size_t>(wrap(k, shift_c2))].c2 = amps[i].c2;
  }
  return FieldBuilder::make(state.cebit(), state.grid_per_step(), state.roundtrips(), ring.lowest,
                            std::move(out));
}

void require_grid(std::int64_t grid) {
  if (grid < 1) throw std::invalid_argument("grid_per_step must be >= 1");
}

}  // namespace

// -- FieldState -----------------------------------------------------------------

FieldState FieldState::single_frequency(Position index, const InitialCoinState& cebit,
                                        CebitKind kind, std::int64_t grid_per_step) {
  require_grid(grid_per_step);
  require_normalized(cebit);
  return FieldState(kind, grid_per_step, 0, index, {{cebit.alpha, cebit.beta}});
}

FieldState FieldState::from_walk(const WalkState& walk, CebitKind kind, std::int64_t grid_per_step) {
  require_grid(grid_per_step);
  const auto sites = walk.sites();
  const Position first = walk.first_position() * grid_per_step;
  const std::int64_t spacing = walk.stride() * grid_per_step;
  std::vector<CebitAmplitudes> amps(
      sites.empty() ? 0 : static_cast<std::size_t>((sites.size() - 1) * spacing + 1));
  for (std::size_t i = 0; i < sites.size(); ++i)
    amps[i * static_cast<std::size_t>(spacing)] = {sites[i].right, sites[i].left};
  return FieldState(kind, grid_per_step, 0, first, std::move(amps));
}

CebitAmplitudes FieldState::at(Position index) const {
  if (index < first_ || index > last_index()) return {};
  return amps_[static_cast<std::size_t>(index - first_)];
}

double FieldState::intensity() const {
  long double sum = 0.0L;
  for (const auto& v : amps_) sum += std::norm(v.c1) + std::norm(v.c2);
  return static_cast<double>(sum);
}

// -- Element matrices -------------------------------------------------------------

FrequencyRing FrequencyRing::symmetric(std::int64_t half_size) {
  return for_circle(half_size, 1);
}

FrequencyRing FrequencyRing::for_circle(std::int64_t half_size, std::int64_t grid_per_step) {
  if (half_size < 1) throw std::invalid_argument("EOM-bar requires M >= 1");
  require_grid(grid_per_step);
  return {-grid_per_step * half_size, grid_per_step * half_size + grid_per_step - 1};
}

CoinOperator hwp_matrix(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  return {c, s, s, -c};
}

CoinOperator retarder_matrix(double theta, double retardance) {
  const CoinOperator phases{std::polar(1.0, -retardance / 2.0), 0.0, 0.0,
                            std::polar(1.0, retardance / 2.0)};
  return rotation(-theta) * phases * rotation(theta);
}

CoinOperator qwp_matrix(double theta) { return retarder_matrix(theta, kPi / 2.0); }

CoinOperator beamsplitter_matrix(const BeamSplitter& bs) {
  if (bs.phase_compensated) {
    if (std::abs(bs.mixing_angle - kPi / 4.0) > 1e-12)
      throw std::invalid_argument("phase-compensated beamsplitter must be 50/50");
    return make_hadamard();
  }
  const Amplitude t{std::cos(bs.mixing_angle), 0.0};
  const Amplitude r{0.0, std::sin(bs.mixing_angle)};
  return {t, r, r, t};
}

CouplerPaths coupler_paths() {
  const CoinOperator qwp1 = qwp_matrix(kPi / 4.0);
  const CoinOperator qwp2 = qwp_matrix(-kPi / 4.0);
  const CebitAmplitudes x{1.0, 0.0};
  const CebitAmplitudes y{0.0, 1.0};
  return {mix(qwp2 * qwp1, x), mix(qwp1 * qwp1, x), mix(qwp1 * qwp2, y), mix(qwp2 * qwp2, y)};
}

CoinOperator coupler_matrix(const BidirectionalCoupler& coupler) {
  // Each path contributes the splitter amplitude times the phase its
  // polarization picks up in the plates; the splitter's phase filters divide
  // that phase out. Any light left in the wrong polarization would leave the
  // two supported modes, so it must vanish.
  const CouplerPaths p = coupler_paths();
  const double leak = std::max({std::abs(p.clockwise_transmitted.c2), std::abs(p.clockwise_reflected.c1),
                                std::abs(p.counterclockwise_transmitted.c1),
                                std::abs(p.counterclockwise_reflected.c2)});
  if (leak > 1e-12) throw std::logic_error("coupler plates leak light out of the hybrid modes");

  const CoinOperator& u = coupler.coin;
  const CoinOperator splitter{u.a / p.clockwise_transmitted.c1, u.b / p.counterclockwise_reflected.c1,
                              u.c / p.clockwise_reflected.c2, u.d / p.counterclockwise_transmitted.c2};
  return {splitter.a * p.clockwise_transmitted.c1, splitter.b * p.counterclockwise_reflected.c1,
          splitter.c * p.clockwise_reflected.c2, splitter.d * p.counterclockwise_transmitted.c2};
}

// -- Element application --------------------------------------------------------------

FieldState apply_eom(const FieldState& state, std::int64_t shift_c1, std::int64_t shift_c2) {
  const auto amps = state.amplitudes();
  if (amps.empty()) return state;
  const std::int64_t low = std::min(shift_c1, shift_c2);
  const std::int64_t high = std::max(shift_c1, shift_c2);
  std::vector<CebitAmplitudes> out(amps.size() + static_cast<std::size_t>(high - low));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out[i + static_cast<std::size_t>(shift_c1 - low)].c1 = amps[i].c1;
    out[i + static_cast<std::size_t>(shift_c2 - low)].c2 = amps[i].c2;
  }
  return FieldBuilder::make(state.cebit(), state.grid_per_step(), state.roundtrips(),
                            state.first_index() + low, std::move(out));
}

FieldState apply_eombar(const FieldState& state, std::int64_t half_size, ShiftDirection direction) {
  const int shift = direction == ShiftDirection::Increase ? 1 : -1;
  return apply_ring_shift(state, FrequencyRing::symmetric(half_size), shift, shift);
}

FieldState apply_element(const FieldState& state, const OpticalElement& element) {
  struct Visitor {
    const FieldState& state;
    FieldState operator()(const Eom& e) const { return apply_eom(state, e.shift_c1, e.shift_c2); }
    FieldState operator()(const EomBar& e) const {
      if (std::abs(e.shift_c1) > 1 || std::abs(e.shift_c2) > 1)
        throw std::invalid_argument("EOM-bar shifts are -1, 0 or +1");
      return apply_ring_shift(state, e.ring, e.shift_c1, e.shift_c2);
    }
    FieldState operator()(const WavePlate& w) const {
      return apply_matrix(state, w.kind == WavePlateKind::Half ? hwp_matrix(w.theta) : qwp_matrix(w.theta));
    }
    FieldState operator()(const Retarder& r) const {
      return apply_matrix(state, retarder_matrix(r.theta, r.retardance));
    }
    FieldState operator()(const BeamSplitter& bs) const {
      if (state.cebit() != CebitKind::Path)
        throw std::invalid_argument("beamsplitter acts on path cebits");
      return apply_matrix(state, beamsplitter_matrix(bs));
    }
    FieldState operator()(const BidirectionalCoupler& c) const {
      if (state.cebit() != CebitKind::Hybrid)
        throw std::invalid_argument("bidirectional coupler acts on hybrid cebits");
      return apply_matrix(state, coupler_matrix(c));
    }
  };
  return std::visit(Visitor{state}, element);
}

// -- Cavities -----------------------------------------------------------------------

std::int64_t CavityConfig::grid_per_step() const {
  return design == CavityDesign::LinearPolarization ? 2 * roundtrips_per_step : roundtrips_per_step;
}

CoinOperator CavityConfig::coin() const {
  return galton_delta ? make_galton_coin(*galton_delta) : make_hadamard();
}

CebitKind CavityConfig::cebit() const {
  switch (design) {
    case CavityDesign::RingPolarization:
    case CavityDesign::LinearPolarization:
      return CebitKind::Polarization;
    case CavityDesign::DualRingPath:
      return CebitKind::Path;
    case CavityDesign::BidirectionalHybrid:
      return CebitKind::Hybrid;
  }
  throw std::logic_error("unknown cavity design");
}

namespace {

void require_valid_config(const CavityConfig& config) {
  if (config.roundtrips_per_step < 1)
    throw std::invalid_argument("roundtrips per step (f) must be >= 1");
  if (config.topology.kind == TopologyKind::Circle && config.topology.half_size < 1)
    throw std::invalid_argument("circle topology requires M >= 1");
  if (config.galton_delta && !std::isfinite(*config.galton_delta))
    throw std::invalid_argument("galton angle must be finite");
}

// Frequency shifter: plain EOM on the line, EOM-bar on the circle.
OpticalElement shifter(const CavityConfig& config, int shift_c1, int shift_c2) {
  if (config.topology.kind == TopologyKind::Circle)
    return EomBar{FrequencyRing::for_circle(config.topology.half_size, config.grid_per_step()),
                  shift_c1, shift_c2};
  return Eom{shift_c1, shift_c2};
}

}  // namespace

std::vector<OpticalElement> roundtrip_elements(const CavityConfig& config, bool coin_active) {
  require_valid_config(config);
  std::vector<OpticalElement> elements;
  const auto& delta = config.galton_delta;
  switch (config.design) {
    case CavityDesign::RingPolarization:
      elements.push_back(shifter(config, +1, -1));
      if (coin_active) {
        if (delta)
          elements.push_back(Retarder{kPi / 4.0, 2.0 * *delta});
        else
          elements.push_back(WavePlate{WavePlateKind::Half, kPi / 8.0});
      }
      break;
    case CavityDesign::LinearPolarization:
      elements.push_back(shifter(config, +1, -1));
      elements.push_back(shifter(config, +1, -1));
      if (coin_active) {
        const OpticalElement plate = delta ? OpticalElement{Retarder{kPi / 4.0, *delta}}
                                           : OpticalElement{WavePlate{WavePlateKind::Quarter, kPi / 8.0}};
        elements.push_back(plate);
        elements.push_back(plate);
      }
      break;
    case CavityDesign::DualRingPath:
      elements.push_back(shifter(config, +1, 0));
      elements.push_back(shifter(config, 0, -1));
      if (coin_active) {
        // The raw splitter at angle -delta is the Galton coin itself.
        if (delta)
          elements.push_back(BeamSplitter{-*delta, false});
        else
          elements.push_back(BeamSplitter{});
      }
      break;
    case CavityDesign::BidirectionalHybrid:
      elements.push_back(shifter(config, +1, -1));
      if (coin_active) elements.push_back(BidirectionalCoupler{config.coin()});
      break;
  }
  return elements;
}

bool coin_active(const CavityConfig& config, std::int64_t roundtrip) {
  return config.gating == CoinGating::EveryRoundtrip || roundtrip % config.roundtrips_per_step == 0;
}

FieldState roundtrip(const FieldState& state, const CavityConfig& config) {
  require_valid_config(config);
  if (state.cebit() != config.cebit())
    throw std::invalid_argument("field cebit kind does not match the cavity design");
  if (state.grid_per_step() != config.grid_per_step()) {
    std::ostringstream msg;
    msg << "field grid has " << state.grid_per_step() << " indices per step, cavity needs "
        << config.grid_per_step();
    throw std::invalid_argument(msg.str());
  }
  const std::int64_t number = state.roundtrips() + 1;
  FieldState current = state;
  for (const auto& element : roundtrip_elements(config, coin_active(config, number)))
    current = apply_element(current, element);
  return FieldBuilder::with_roundtrips(std::move(current), number);
}

FieldState run_cavity(const FieldState& initial, const CavityConfig& config, std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("number of steps must be non-negative");
  require_valid_config(config);
  FieldState current = initial;
  const std::int64_t total = steps * config.roundtrips_per_step;
  for (std::int64_t i = 0; i < total; ++i) current = roundtrip(current, config);
  return current;
}

FieldState inject(const CavityConfig& config, Position origin, const InitialCoinState& cebit) {
  require_valid_config(config);
  if (config.topology.kind == TopologyKind::Circle &&
      (origin < -config.topology.half_size || origin > config.topology.half_size)) {
    std::ostringstream msg;
    msg << "origin " << origin << " outside circle range [" << -config.topology.half_size << ", "
        << config.topology.half_size << "]";
    throw std::invalid_argument(msg.str());
  }
  return FieldState::single_frequency(origin * config.grid_per_step(), cebit, config.cebit(),
                                      config.grid_per_step());
}

ProbabilityDistribution spectrum(const FieldState& state) {
  ProbabilityDistribution dist;
  dist.steps = state.roundtrips();
  dist.resolution = state.grid_per_step();
  const auto amps = state.amplitudes();
  dist.entries.reserve(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p1 = std::norm(amps[i].c1);
    const double p2 = std::norm(amps[i].c2);
    dist.entries.push_back({state.first_index() + static_cast<Position>(i), p1 + p2, p1, p2});
  }
  return dist;
}

std::vector<PortLine> port_spectrum(const FieldState& state, OutputPort port) {
  std::vector<PortLine> lines;
  const auto amps = state.amplitudes();
  lines.reserve(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Amplitude& v = port == OutputPort::C1 ? amps[i].c1 : amps[i].c2;
    lines.push_back({state.first_index() + static_cast<Position>(i), std::norm(v)});
  }
  return lines;
}

}  // namespace qwalk::optics
