#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::optics {

/// Which physical degree of freedom carries the two coin components.
enum class CebitKind {
  Polarization,  // c1 = x, c2 = y
  Path,          // c1 = path r1, c2 = path r2
  Hybrid,        // c1 = clockwise x-polarized, c2 = counterclockwise y-polarized
};

struct CebitAmplitudes {
  Amplitude c1;
  Amplitude c2;
};

/// Intracavity field: a two-component complex amplitude per frequency
/// index. One walk step spans `grid_per_step()` frequency indices, so a
/// frequency index k corresponds to walk position k / grid_per_step().
class FieldState {
 public:
  /// Field injected at a single frequency. Throws std::invalid_argument
  /// unless the cebit is normalized and grid_per_step >= 1.
  static FieldState single_frequency(Position index, const InitialCoinState& cebit, CebitKind kind,
                                     std::int64_t grid_per_step = 1);

  /// Field whose spectrum carries a walk state's amplitudes, position m
  /// mapped to index m * grid_per_step.
  static FieldState from_walk(const WalkState& walk, CebitKind kind, std::int64_t grid_per_step = 1);

  CebitKind cebit() const { return cebit_; }
  std::int64_t grid_per_step() const { return grid_; }
  std::int64_t roundtrips() const { return roundtrips_; }

  Position first_index() const { return first_; }
  Position last_index() const { return first_ + static_cast<Position>(amps_.size()) - 1; }
  std::span<const CebitAmplitudes> amplitudes() const { return amps_; }
  CebitAmplitudes at(Position index) const;

  /// Total intensity, sum of |c1|^2 + |c2|^2.
  double intensity() const;

 private:
  friend class FieldBuilder;

  FieldState(CebitKind kind, std::int64_t grid, std::int64_t roundtrips, Position first,
             std::vector<CebitAmplitudes> amps)
      : cebit_(kind), grid_(grid), roundtrips_(roundtrips), first_(first), amps_(std::move(amps)) {}

  CebitKind cebit_;
  std::int64_t grid_;
  std::int64_t roundtrips_;
  Position first_;
  std::vector<CebitAmplitudes> amps_;
};

// -- Optical elements --------------------------------------------------------

/// Electro-optic modulator: shifts component c1 by shift_c1 frequency
/// indices and c2 by shift_c2.
struct Eom {
  std::int64_t shift_c1 = 0;
  std::int64_t shift_c2 = 0;
};

enum class ShiftDirection { Increase, Decrease };

/// Closed range of frequency indices that an EOM-bar keeps the field in.
struct FrequencyRing {
  Position lowest = 0;
  Position highest = 0;

  /// [-M, M].
  static FrequencyRing symmetric(std::int64_t half_size);
  /// Ring for a 2M+1 site circle on a grid with `grid_per_step` indices per
  /// site: [-gM, gM + g - 1], so g unit shifts carry site M onto site -M.
  static FrequencyRing for_circle(std::int64_t half_size, std::int64_t grid_per_step);

  std::int64_t size() const { return highest - lowest + 1; }
  bool contains(Position k) const { return k >= lowest && k <= highest; }
};

/// Frequency-wrapping modulator pair with its two single-frequency mirrors.
/// Each component moves one index in its direction (0 leaves it alone);
/// the top (bottom) frequency is routed through the second modulator and
/// comes out at the bottom (top) of the ring. Equal arm lengths, so no
/// extra phase.
struct EomBar {
  FrequencyRing ring;
  int shift_c1 = 0;  // -1, 0, +1
  int shift_c2 = 0;
};

enum class WavePlateKind { Half, Quarter };

/// Ideal wave plate with fast axis at `theta` from x.
struct WavePlate {
  WavePlateKind kind = WavePlateKind::Half;
  double theta = 0.0;
};

/// Linear retarder: a modulator driven at constant voltage, axis at
/// `theta`, retardance `retardance` between its eigenpolarizations.
struct Retarder {
  double theta = 0.0;
  double retardance = 0.0;
};

/// Path beamsplitter. The raw element has transmission cos(angle) and
/// reflection i sin(angle). With `phase_compensated` (50/50 only) it stands
/// for the splitter plus phase shifters that together act as a Hadamard.
struct BeamSplitter {
  double mixing_angle = 0.7853981633974483;  // pi/4
  bool phase_compensated = true;
};

/// QWP1 (axis pi/4) / beamsplitter / QWP2 (axis -pi/4) block of the
/// bidirectional ring. Transmitted light keeps its polarization; reflected
/// light crosses one plate twice and swaps x and y. The beamsplitter's
/// phase filters are chosen so the block acts as `coin` on the
/// (clockwise-x, counterclockwise-y) pair.
struct BidirectionalCoupler {
  CoinOperator coin;
};

using OpticalElement =
    std::variant<Eom, EomBar, WavePlate, Retarder, BeamSplitter, BidirectionalCoupler>;

/// [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
CoinOperator hwp_matrix(double theta);

/// R(-t) diag(e^{-i pi/4}, e^{i pi/4}) R(t), so that qwp(t)^2 = -i hwp(t).
CoinOperator qwp_matrix(double theta);

/// R(-t) diag(e^{-i phi/2}, e^{i phi/2}) R(t).
CoinOperator retarder_matrix(double theta, double retardance);

CoinOperator beamsplitter_matrix(const BeamSplitter& bs);

/// Jones vectors produced by the two quarter-wave plates of the
/// bidirectional coupler for each of its four paths.
struct CouplerPaths {
  CebitAmplitudes clockwise_transmitted;         // x in, QWP1 then QWP2
  CebitAmplitudes clockwise_reflected;           // x in, QWP1 twice
  CebitAmplitudes counterclockwise_transmitted;  // y in, QWP2 then QWP1
  CebitAmplitudes counterclockwise_reflected;    // y in, QWP2 twice
};
CouplerPaths coupler_paths();

/// Effective 2x2 action of the coupler on (clockwise-x, counterclockwise-y).
CoinOperator coupler_matrix(const BidirectionalCoupler& coupler);

/// Moves (m, c1) to (m + shift_c1, c1) and (m, c2) to (m + shift_c2, c2).
FieldState apply_eom(const FieldState& state, std::int64_t shift_c1, std::int64_t shift_c2);

/// Both components move one index in `direction` on [-M, M], wrapping at
/// the ends. Throws std::invalid_argument if the field has intensity
/// outside [-M, M].
FieldState apply_eombar(const FieldState& state, std::int64_t half_size, ShiftDirection direction);

FieldState apply_element(const FieldState& state, const OpticalElement& element);

// -- Cavities -----------------------------------------------------------------

enum class CavityDesign {
  RingPolarization,     // ring: EOM + HWP at pi/8
  LinearPolarization,   // Fabry-Perot: EOM at half shift + QWP, both crossed twice
  DualRingPath,         // two coupled rings: EOM1 up, EOM2 down, beamsplitter
  BidirectionalHybrid,  // bidirectional ring: one EOM + QWP1/BS/QWP2 block
};

enum class CoinGating {
  EveryFRoundtrips,  // coin once per completed walk step
  EveryRoundtrip,    // coin on every pass (optical Galton board)
};

struct CavityConfig {
  CavityDesign design = CavityDesign::RingPolarization;
  WalkTopology topology = WalkTopology::line();
  /// Roundtrips needed for one walk step (f >= 1).
  std::int64_t roundtrips_per_step = 1;
  CoinGating gating = CoinGating::EveryFRoundtrips;
  /// When set, the coin element is a voltage-driven retarder producing the
  /// Galton coin for this angle over one roundtrip instead of a Hadamard.
  std::optional<double> galton_delta;

  /// Frequency indices per walk step: f for ring designs, 2f for the linear
  /// cavity whose modulator is crossed twice per roundtrip at half shift.
  std::int64_t grid_per_step() const;
  /// Coin realized by one gated roundtrip, up to a global phase.
  CoinOperator coin() const;
  CebitKind cebit() const;
};

/// Elements crossed in one roundtrip, in order, starting from the plane
/// where the field is injected and read out.
///
/// The linear cavity is referenced at the plane between the modulator and
/// the quarter-wave plate, facing the modulator: the field crosses the
/// modulator out and back, then the plate back and out, so one roundtrip
/// is a full shift followed by two plate passes.
std::vector<OpticalElement> roundtrip_elements(const CavityConfig& config, bool coin_active);

/// Whether roundtrip number `roundtrip` (1-based) applies the coin.
bool coin_active(const CavityConfig& config, std::int64_t roundtrip);

/// One roundtrip. Throws std::invalid_argument when the field's cebit kind
/// or grid does not match the design.
FieldState roundtrip(const FieldState& state, const CavityConfig& config);

/// steps * f roundtrips.
FieldState run_cavity(const FieldState& initial, const CavityConfig& config, std::int64_t steps);

/// Field for injecting coin state `cebit` at walk position `origin`.
FieldState inject(const CavityConfig& config, Position origin, const InitialCoinState& cebit);

/// Intensity per frequency index with both cebit marginals. `resolution` is
/// the field's grid and `steps` the roundtrip count.
ProbabilityDistribution spectrum(const FieldState& state);

enum class OutputPort { C1, C2 };

struct PortLine {
  Position index = 0;
  double intensity = 0.0;
};

/// Spectrum seen through a single output port, carrying only one cebit
/// component. Not normalized.
std::vector<PortLine> port_spectrum(const FieldState& state, OutputPort port);

}  // namespace qwalk::optics
