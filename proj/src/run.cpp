#include "qwalk/run.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

namespace qwalk::cli {

namespace {

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

void require_origin_in_circle(Position origin, std::int64_t half_size) {
  if (half_size < 1) fail("circle requires --M >= 1");
  if (origin < -half_size || origin > half_size)
    fail("--origin " + std::to_string(origin) + " outside circle range [" +
         std::to_string(-half_size) + ", " + std::to_string(half_size) + "]");
}

optics::CavityConfig cavity_config(const RunConfig& config) {
  optics::CavityConfig cavity;
  cavity.design = config.design;
  cavity.roundtrips_per_step = config.f;
  cavity.gating = config.gating;
  if (config.mode == Mode::Galton) cavity.gating = optics::CoinGating::EveryRoundtrip;
  cavity.topology = config.mode == Mode::Cavity && config.topology == TopologyKind::Circle
                        ? WalkTopology::circle(config.half_size)
                        : WalkTopology::line();
  if (config.coin.kind == CoinKind::Delta) cavity.galton_delta = config.coin.angle;
  return cavity;
}

ProbabilityDistribution on_walk_grid_if_possible(const ProbabilityDistribution& dist) {
  for (const auto& e : dist.entries)
    if (e.position % dist.resolution != 0 && e.p != 0.0) return dist;
  return to_walk_positions(dist, 0.0);
}

template <typename F>
std::optional<MomentReport> try_predict(F&& predict) {
  try {
    return predict();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

RunResult execute_validated(const RunConfig& config) {
  RunResult result;
  switch (config.mode) {
    case Mode::Line:
    case Mode::Circle: {
      const WalkTopology topology =
          config.mode == Mode::Line ? WalkTopology::line() : WalkTopology::circle(config.half_size);
      const CoinOperator coin = config.coin.build();
      const WalkState final_state =
          evolve(initial_state(topology, config.origin, config.init), coin, config.ordering, config.steps);
      result.distribution = probabilities(final_state);
      if (config.mode == Mode::Line) {
        result.predicted = try_predict([&] { return konno_predicted_moments(coin, config.init, config.steps); });
        result.predicted_walk_convention = try_predict(
            [&] { return walk_asymptotic_moments(coin, config.init, config.steps, config.ordering); });
      }
      break;
    }
    case Mode::Galton:
    case Mode::Cavity: {
      const optics::CavityConfig cavity = cavity_config(config);
      const optics::FieldState field =
          optics::run_cavity(optics::inject(cavity, config.origin, config.init), cavity, config.steps);
      result.distribution = on_walk_grid_if_possible(optics::spectrum(field));
      result.distribution.steps = config.steps;
      if (config.mode == Mode::Galton) {
        result.predicted =
            try_predict([&] { return galton_predicted_moments(config.coin.angle, config.init, config.steps); });
        const WalkState walk = evolve(initial_state(WalkTopology::line(), config.origin, config.init),
                                      cavity.coin(), StepOrdering::CoinAfterShift, config.steps);
        result.tv_vs_quantum_walk = total_variation(result.distribution, probabilities(walk));
      }
      break;
    }
    case Mode::Classical: {
      result.distribution = classical_rw_distribution(config.steps);
      for (auto& e : result.distribution.entries) e.position += config.origin;
      const double n = static_cast<double>(config.steps);
      const double mean = static_cast<double>(config.origin);
      result.predicted = MomentReport{mean, n + mean * mean, n, std::sqrt(n)};
      break;
    }
  }
  result.measured = moments(result.distribution);
  if (config.compare_classical) {
    ProbabilityDistribution baseline = classical_rw_distribution(config.steps);
    for (auto& e : baseline.entries) e.position += config.origin;
    result.tv_vs_classical = total_variation(result.distribution, baseline);
  }
  return result;
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Line: return "line";
    case Mode::Circle: return "circle";
    case Mode::Galton: return "galton";
    case Mode::Cavity: return "cavity";
    case Mode::Classical: return "classical";
  }
  return "?";
}

}  // namespace

CoinOperator CoinSpec::build() const {
  try {
    switch (kind) {
      case CoinKind::Hadamard: return make_hadamard();
      case CoinKind::Konno: return make_konno_coin(a, b, delta);
      case CoinKind::Delta: return make_galton_coin(angle);
    }
  } catch (const std::invalid_argument& e) {
    fail(std::string("--coin: ") + e.what());
  }
  fail("--coin: unknown coin kind");
}

void validate(const RunConfig& config) {
  if (config.steps < 0) fail("--steps must be >= 0");
  try {
    require_normalized(config.init);
  } catch (const std::invalid_argument& e) {
    fail(std::string("--init: ") + e.what());
  }
  config.coin.build();

  switch (config.mode) {
    case Mode::Line:
      break;
    case Mode::Circle:
      require_origin_in_circle(config.origin, config.half_size);
      break;
    case Mode::Galton:
      if (config.coin.kind != CoinKind::Delta) fail("galton mode needs --coin delta <angle>");
      if (config.f < 1) fail("--f must be >= 1");
      break;
    case Mode::Cavity:
      if (config.coin.kind == CoinKind::Konno)
        fail("cavity designs realize only the hadamard or delta coins");
      if (config.f < 1) fail("--f must be >= 1");
      if (config.topology == TopologyKind::Circle) require_origin_in_circle(config.origin, config.half_size);
      break;
    case Mode::Classical:
      break;
  }
}

RunResult execute(const RunConfig& config) {
  validate(config);
  try {
    return execute_validated(config);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

void write_csv(std::ostream& out, const ProbabilityDistribution& dist, std::int64_t index_offset) {
  out << "m,P,P_R,P_L\n";
  for (const auto& e : dist.entries) {
    out << (e.position + index_offset) << ',' << format_double(e.p) << ','
        << format_double(e.p_right) << ',' << format_double(e.p_left) << '\n';
  }
}

void write_summary(std::ostream& out, const RunConfig& config, const RunResult& result) {
  auto line = [&](const char* key, double value) { out << key << ": " << format_double(value) << '\n'; };
  out << "mode: " << mode_name(config.mode) << '\n';
  out << "n: " << config.steps << '\n';
  if (result.distribution.resolution != 1)
    out << "resolution: " << result.distribution.resolution << " indices per step\n";
  line("total_probability", result.distribution.total());
  line("mean", result.measured.mean);
  line("second_moment", result.measured.second_moment);
  line("variance", result.measured.variance);
  line("std_dev", result.measured.std_dev);
  if (result.predicted) {
    line("predicted_mean", result.predicted->mean);
    line("predicted_second_moment", result.predicted->second_moment);
    line("predicted_std_dev", result.predicted->std_dev);
  }
  if (result.predicted_walk_convention) {
    line("asymptotic_mean_walk_convention", result.predicted_walk_convention->mean);
    line("asymptotic_std_dev_walk_convention", result.predicted_walk_convention->std_dev);
  }
  if (result.tv_vs_classical) line("tv_vs_classical", *result.tv_vs_classical);
  if (result.tv_vs_quantum_walk) line("tv_vs_quantum_walk", *result.tv_vs_quantum_walk);
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + temp.string() + " for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

RunConfig with_parameter(RunConfig base, SweepParameter parameter, double value) {
  auto as_integer = [&](const char* name) {
    if (value != std::floor(value)) fail(std::string("sweep value for ") + name + " must be an integer");
    return static_cast<std::int64_t>(value);
  };
  switch (parameter) {
    case SweepParameter::Delta:
      base.coin.kind = CoinKind::Delta;
      base.coin.angle = value;
      break;
    case SweepParameter::Steps: base.steps = as_integer("steps"); break;
    case SweepParameter::F: base.f = as_integer("f"); break;
    case SweepParameter::HalfSize: base.half_size = as_integer("M"); break;
    case SweepParameter::Origin: base.origin = as_integer("origin"); break;
  }
  return base;
}

std::vector<SweepRow> sweep(const RunConfig& base, const SweepSpec& spec,
                            const std::optional<std::filesystem::path>& run_dir) {
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    pending.push_back(std::async(std::launch::async, [&, i] {
      SweepRow row;
      row.value = spec.values[i];
      try {
        const RunConfig config = with_parameter(base, spec.parameter, row.value);
        RunResult result = execute(config);
        if (run_dir) {
          std::ostringstream csv;
          write_csv(csv, result.distribution, config.index_offset);
          write_file_atomically(*run_dir / ("run_" + std::to_string(i) + ".csv"), csv.str());
        }
        row.result = std::move(result);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "parameter,mean,std_dev,predicted_std_dev\n";
  for (const auto& row : rows) {
    if (!row.result) continue;
    out << format_double(row.value) << ',' << format_double(row.result->measured.mean) << ','
        << format_double(row.result->measured.std_dev) << ',';
    if (row.result->predicted) out << format_double(row.result->predicted->std_dev);
    out << '\n';
  }
}

double parse_angle(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      fail("cannot parse number '" + raw + "'");
    }
    if (used != s.size() || !std::isfinite(v)) fail("cannot parse number '" + raw + "'");
    return v;
  };
  const auto pi_at = text.find("pi");
  if (pi_at == std::string::npos) return number(text);

  std::string coefficient = text.substr(0, pi_at);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.pop_back();
  double scale = 1.0;
  if (coefficient == "-")
    scale = -1.0;
  else if (!coefficient.empty() && coefficient != "+")
    scale = number(coefficient);
  const std::string rest = text.substr(pi_at + 2);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') fail("cannot parse angle '" + raw + "'");
    divisor = number(rest.substr(1));
    if (divisor == 0.0) fail("angle '" + raw + "' divides by zero");
  }
  return scale * std::numbers::pi / divisor;
}

std::optional<Mode> parse_mode(const std::string& text) {
  if (text == "line") return Mode::Line;
  if (text == "circle") return Mode::Circle;
  if (text == "galton") return Mode::Galton;
  if (text == "cavity") return Mode::Cavity;
  if (text == "classical") return Mode::Classical;
  return std::nullopt;
}

std::optional<optics::CavityDesign> parse_design(const std::string& text) {
  using optics::CavityDesign;
  if (text == "ring-polarization" || text == "ring") return CavityDesign::RingPolarization;
  if (text == "linear-polarization" || text == "linear") return CavityDesign::LinearPolarization;
  if (text == "dual-ring-path" || text == "dual-ring") return CavityDesign::DualRingPath;
  if (text == "bidirectional-hybrid" || text == "hybrid") return CavityDesign::BidirectionalHybrid;
  return std::nullopt;
}

std::optional<optics::CoinGating> parse_gating(const std::string& text) {
  if (text == "every-f") return optics::CoinGating::EveryFRoundtrips;
  if (text == "every-roundtrip") return optics::CoinGating::EveryRoundtrip;
  return std::nullopt;
}

std::optional<StepOrdering> parse_ordering(const std::string& text) {
  if (text == "coin-after-shift" || text == "UV") return StepOrdering::CoinAfterShift;
  if (text == "shift-after-coin" || text == "VU") return StepOrdering::ShiftAfterCoin;
  return std::nullopt;
}

std::optional<SweepParameter> parse_sweep_parameter(const std::string& text) {
  if (text == "delta") return SweepParameter::Delta;
  if (text == "steps") return SweepParameter::Steps;
  if (text == "f") return SweepParameter::F;
  if (text == "M") return SweepParameter::HalfSize;
  if (text == "origin") return SweepParameter::Origin;
  return std::nullopt;
}

CoinSpec parse_coin(const std::vector<std::string>& words) {
  if (words.empty()) fail("--coin needs a kind: hadamard, konno or delta");
  CoinSpec spec;
  const std::string& kind = words.front();
  if (kind == "hadamard") {
    if (words.size() != 1) fail("--coin hadamard takes no parameters");
    spec.kind = CoinKind::Hadamard;
  } else if (kind == "konno") {
    if (words.size() != 7) fail("--coin konno needs a_re a_im b_re b_im d_re d_im");
    double v[6];
    for (int i = 0; i < 6; ++i) v[i] = parse_angle(words[static_cast<std::size_t>(i) + 1]);
    spec.kind = CoinKind::Konno;
    spec.a = {v[0], v[1]};
    spec.b = {v[2], v[3]};
    spec.delta = {v[4], v[5]};
  } else if (kind == "delta") {
    if (words.size() != 2) fail("--coin delta needs one angle");
    spec.kind = CoinKind::Delta;
    spec.angle = parse_angle(words[1]);
  } else {
    fail("unknown coin '" + kind + "' (expected hadamard, konno or delta)");
  }
  return spec;
}

}  // namespace qwalk::cli
