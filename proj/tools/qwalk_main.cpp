// Command-line front end: walks, cavities, Galton schedules and sweeps as CSV.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwalk/run.hpp"

namespace {

using namespace qwalk::cli;

struct Options {
  RunConfig config;
  std::vector<std::string> coin{"hadamard"};
  std::vector<std::string> init;
  std::string topology = "line";
  std::string design = "ring-polarization";
  std::string gating = "every-f";
  std::string ordering = "coin-after-shift";
  std::string output;
  // sweep only
  std::string mode = "line";
  std::string param = "delta";
  std::vector<std::string> values;
  std::string run_dir;
};

void add_run_options(CLI::App* cmd, Options& o, bool with_cavity) {
  cmd->configurable();
  cmd->add_option("--steps,-n", o.config.steps, "Number of walk steps");
  cmd->add_option("--coin", o.coin, "hadamard | konno a_re a_im b_re b_im d_re d_im | delta <angle>")
      ->expected(1, 7);
  cmd->add_option("--init", o.init, "Initial coin state: alpha_re alpha_im beta_re beta_im")->expected(4);
  cmd->add_option("--origin", o.config.origin, "Starting position");
  cmd->add_option("--M", o.config.half_size, "Circle half-size (2M+1 sites)");
  cmd->add_option("--ordering", o.ordering, "coin-after-shift | shift-after-coin");
  cmd->add_option("--index-offset", o.config.index_offset, "Added to every position in the CSV");
  cmd->add_flag("--compare-classical", o.config.compare_classical,
                "Report total-variation distance to the classical walk");
  cmd->add_option("--output,-o", o.output, "CSV file (default: standard output)");
  if (with_cavity) {
    cmd->add_option("--topology", o.topology, "line | circle");
    cmd->add_option("--design", o.design,
                    "ring-polarization | linear-polarization | dual-ring-path | bidirectional-hybrid");
    cmd->add_option("--f", o.config.f, "Roundtrips per walk step");
    cmd->add_option("--gating", o.gating, "every-f | every-roundtrip");
  }
}

template <typename T>
T require(std::optional<T> parsed, const std::string& flag, const std::string& text) {
  if (!parsed) throw ConfigError("unknown value '" + text + "' for " + flag);
  return *parsed;
}

void finish_config(Options& o, Mode mode) {
  RunConfig& c = o.config;
  c.mode = mode;
  c.coin = parse_coin(o.coin);
  if (!o.init.empty()) {
    c.init = {{parse_angle(o.init[0]), parse_angle(o.init[1])},
              {parse_angle(o.init[2]), parse_angle(o.init[3])}};
  }
  if (o.topology == "circle")
    c.topology = qwalk::TopologyKind::Circle;
  else if (o.topology != "line")
    throw ConfigError("unknown value '" + o.topology + "' for --topology");
  c.design = require(parse_design(o.design), "--design", o.design);
  c.gating = require(parse_gating(o.gating), "--gating", o.gating);
  c.ordering = require(parse_ordering(o.ordering), "--ordering", o.ordering);
}

void emit(const std::string& output, const std::string& csv, const std::string& summary) {
  if (output.empty() || output == "-") {
    std::cout << csv;
    std::cerr << summary;
  } else {
    write_file_atomically(output, csv);
    std::cout << summary;
  }
}

int run_single(Options& o, Mode mode) {
  finish_config(o, mode);
  const RunResult result = execute(o.config);
  std::ostringstream csv;
  std::ostringstream summary;
  write_csv(csv, result.distribution, o.config.index_offset);
  write_summary(summary, o.config, result);
  emit(o.output, csv.str(), summary.str());
  return 0;
}

int run_sweep(Options& o) {
  finish_config(o, require(parse_mode(o.mode), "--mode", o.mode));
  SweepSpec spec;
  spec.parameter = require(parse_sweep_parameter(o.param), "--param", o.param);
  for (const auto& v : o.values)
    if (!v.empty()) spec.values.push_back(parse_angle(v));
  std::optional<std::filesystem::path> run_dir;
  if (!o.run_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.run_dir, ec);
    if (ec) throw IoError("cannot create run directory " + o.run_dir);
    run_dir = o.run_dir;
  }
  const auto rows = sweep(o.config, spec, run_dir);
  std::ostringstream csv;
  std::ostringstream summary;
  write_sweep_csv(csv, rows);
  int status = 0;
  for (const auto& row : rows) {
    if (row.result) continue;
    summary << "run " << row.value << " failed: " << row.error << '\n';
    status = kExitConfigError;
  }
  summary << "runs: " << rows.size() << '\n';
  emit(o.output, csv.str(), summary.str());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walks on the line and circle, and their optical cavity realizations"};
  app.set_config("--config", "", "Read options from a manifest file");
  app.require_subcommand(1);

  Options o;
  struct Command {
    const char* name;
    const char* help;
    Mode mode;
    bool cavity;
  };
  const Command commands[] = {
      {"line", "Quantum walk on the line", Mode::Line, false},
      {"circle", "Quantum walk on a circle of 2M+1 sites", Mode::Circle, false},
      {"galton", "Optical Galton board: coin on every cavity roundtrip", Mode::Galton, true},
      {"cavity", "Element-level optical cavity run", Mode::Cavity, true},
      {"classical", "Classical fair-coin random walk", Mode::Classical, false},
  };
  std::vector<std::pair<CLI::App*, Mode>> subcommands;
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_run_options(cmd, o, c.cavity);
    subcommands.emplace_back(cmd, c.mode);
  }
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Independent runs over a list of parameter values");
  add_run_options(sweep_cmd, o, true);
  sweep_cmd->add_option("--mode", o.mode, "line | circle | galton | cavity | classical");
  sweep_cmd->add_option("--param", o.param, "delta | steps | f | M | origin");
  sweep_cmd->add_option("--values", o.values, "Parameter values (numbers or pi fractions)")->delimiter(',');
  sweep_cmd->add_option("--run-dir", o.run_dir, "Directory for per-run CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep(o);
    for (const auto& [cmd, mode] : subcommands)
      if (cmd->parsed()) return run_single(o, mode);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitConfigError;
}
