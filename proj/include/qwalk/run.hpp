#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/optics.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

/// Invalid run configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be written; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

enum class Mode { Line, Circle, Galton, Cavity, Classical };

enum class CoinKind { Hadamard, Konno, Delta };

struct CoinSpec {
  CoinKind kind = CoinKind::Hadamard;
  Amplitude a{1.0};
  Amplitude b{0.0};
  Amplitude delta{1.0};  // Konno determinant phase
  double angle = 0.0;    // Galton angle

  CoinOperator build() const;
};

struct RunConfig {
  Mode mode = Mode::Line;
  std::int64_t steps = 0;
  CoinSpec coin;
  InitialCoinState init;
  Position origin = 0;
  std::int64_t half_size = 0;  // circle M
  TopologyKind topology = TopologyKind::Line;  // cavity mode only
  optics::CavityDesign design = optics::CavityDesign::RingPolarization;
  std::int64_t f = 1;
  optics::CoinGating gating = optics::CoinGating::EveryFRoundtrips;
  StepOrdering ordering = StepOrdering::CoinAfterShift;
  bool compare_classical = false;
  /// Added to every position in the CSV (e.g. M to print a circle as 0..2M).
  std::int64_t index_offset = 0;
};

struct RunResult {
  ProbabilityDistribution distribution;
  MomentReport measured;
  /// Literal asymptotic formula for the mode (line: Konno, galton: Galton,
  /// classical: binomial).
  std::optional<MomentReport> predicted;
  /// Line only: asymptotic moments in this simulator's sign convention.
  std::optional<MomentReport> predicted_walk_convention;
  std::optional<double> tv_vs_classical;
  /// Galton mode only: distance to the true walk with the same coin.
  std::optional<double> tv_vs_quantum_walk;
};

/// Throws ConfigError describing the first violated precondition.
void validate(const RunConfig& config);

/// Validates, then runs. Module-level argument errors surface as ConfigError.
RunResult execute(const RunConfig& config);

/// `m,P,P_R,P_L` with LF endings and 17 significant digits.
void write_csv(std::ostream& out, const ProbabilityDistribution& dist, std::int64_t index_offset = 0);

/// `key: value` lines describing the run.
void write_summary(std::ostream& out, const RunConfig& config, const RunResult& result);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

enum class SweepParameter { Delta, Steps, F, HalfSize, Origin };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::Delta;
  std::vector<double> values;
};

struct SweepRow {
  double value = 0.0;
  std::optional<RunResult> result;
  std::string error;  // set when the run failed
};

/// Applies one parameter value to a copy of the template.
RunConfig with_parameter(RunConfig base, SweepParameter parameter, double value);

/// One independent run per value, executed concurrently, rows in input
/// order. Failed runs carry their message and leave the others untouched.
/// With `run_dir`, each successful run's CSV is written there as
/// run_<index>.csv.
std::vector<SweepRow> sweep(const RunConfig& base, const SweepSpec& spec,
                            const std::optional<std::filesystem::path>& run_dir = std::nullopt);

/// `parameter,mean,std_dev,predicted_std_dev`, failed runs omitted.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Number, or a multiple/fraction of pi: "0.3", "pi", "pi/5", "3pi/10", "3*pi/10", "-pi/4".
double parse_angle(const std::string& text);

std::optional<Mode> parse_mode(const std::string& text);
std::optional<optics::CavityDesign> parse_design(const std::string& text);
std::optional<optics::CoinGating> parse_gating(const std::string& text);
std::optional<StepOrdering> parse_ordering(const std::string& text);
std::optional<SweepParameter> parse_sweep_parameter(const std::string& text);

/// Parses `hadamard`, `konno a_re a_im b_re b_im d_re d_im` or `delta <angle>`.
CoinSpec parse_coin(const std::vector<std::string>& words);

}  // namespace qwalk::cli
