// wigosc: tables of noisy / modulated oscillator quantities as CSV or JSON.

#include "wigosc/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct Flag {
  const char* name;
  const char* help;
};

const std::vector<Flag> kFlags = {
    {"n-param", "dimensionless noise strength N = mu/(m omega^2 hbar) [1]"},
    {"omega-t-max", "end of the omega*t grid [rad]"},
    {"omega-t", "fixed omega*t for phase-dist and transition [rad]"},
    {"grid-points", "rows in the output grid (>= 2) [count]"},
    {"dim", "Fock truncation (spectrum) or number of final states (transition) [count]"},
    {"initial-fock", "initial Fock index for transition [count]"},
    {"u", "parametric growth rate u [1/s]"},
    {"ebar", "parametric modulation depth; enables the full-ODE column [1]"},
    {"f", "parametric detuning [rad/s]"},
    {"t-max", "end of the time grid for parametric and adiabatic [s]"},
    {"eps0", "adiabatic modulation depth [1]"},
    {"slow-rate", "adiabatic modulation rate [rad/s]"},
    {"seed", "Monte Carlo seed [integer]"},
    {"trajectories", "Monte Carlo trajectories [count]"},
    {"partitions", "Monte Carlo worker threads [count]"},
    {"output", "output file, '-' for standard output"},
    {"format", "csv or json"},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace wigosc::cli;

  CLI::App app{"Phase-space tables for the noisy and modulated harmonic oscillator"};
  app.require_subcommand(1);

  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  for (const auto& f : kFlags) opts[f.name] = app.add_option(std::string("--") + f.name, raw[f.name], f.help);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags on the command line win");

  const std::map<std::string, std::string> about = {
      {"survival", "ground-state survival vs omega*t"},
      {"phase-dist", "phase density P(phi) at --omega-t"},
      {"phase-expect", "<phi> and <phi^2> vs omega*t from the ground state"},
      {"spectrum", "eigenvalues of the truncated phase operator"},
      {"parametric", "parametric-oscillator survival vs ut"},
      {"adiabatic", "full ODE minus averaged motion under slow modulation"},
      {"kernel", "noise-kernel rotation and covariance vs omega*t"},
      {"transition", "averaged Fock transition probabilities at --omega-t"},
      {"mc-check", "closed-form survival against the Monte Carlo oracle"},
  };
  for (const auto& name : known_commands()) app.add_subcommand(name, about.at(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidConfig;
  }

  RunConfig cfg;
  try {
    std::map<std::string, std::string> settings;
    if (!config_path.empty()) settings = read_config_file(config_path);
    for (const auto& [name, opt] : opts) {
      if (opt->count() > 0) settings[name] = raw[name];
    }
    for (const auto& [key, value] : settings) apply_setting(cfg, key, value);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, std::cerr);
}
