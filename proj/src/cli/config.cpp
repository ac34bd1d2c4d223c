#include "wigosc/cli/run.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wigosc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw std::invalid_argument("--" + key + ": expected a finite number, got '" + v + "'");
  }
  return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("--" + key + ": expected a non-negative integer, got '" + v + "'");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {"survival", "phase-dist", "phase-expect", "spectrum", "parametric",
                                                "adiabatic", "kernel", "transition", "mc-check"};
  return cmds;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "command") cfg.command = v;
  else if (key == "n-param") cfg.n_param = parse_double(key, v);
  else if (key == "omega-t-max") cfg.omega_t_max = parse_double(key, v);
  else if (key == "omega-t") cfg.omega_t = parse_double(key, v);
  else if (key == "grid-points") cfg.grid_points = parse_unsigned(key, v);
  else if (key == "dim") cfg.dim = parse_unsigned(key, v);
  else if (key == "initial-fock") cfg.initial_fock = parse_unsigned(key, v);
  else if (key == "u") cfg.u = parse_double(key, v);
  else if (key == "ebar") cfg.ebar = parse_double(key, v);
  else if (key == "f") cfg.f = parse_double(key, v);
  else if (key == "t-max") cfg.t_max = parse_double(key, v);
  else if (key == "eps0") cfg.eps0 = parse_double(key, v);
  else if (key == "slow-rate") cfg.slow_rate = parse_double(key, v);
  else if (key == "seed") cfg.seed = parse_unsigned(key, v);
  else if (key == "trajectories") cfg.trajectories = parse_unsigned(key, v);
  else if (key == "partitions") cfg.partitions = parse_unsigned(key, v);
  else if (key == "output") cfg.output = v;
  else if (key == "format") cfg.format = v;
  else throw std::invalid_argument("unknown setting '" + key + "'");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.n_param >= 0.0)) throw std::invalid_argument("--n-param must be >= 0");
  if (!(cfg.omega_t_max > 0.0)) throw std::invalid_argument("--omega-t-max must be > 0");
  if (!(cfg.omega_t >= 0.0)) throw std::invalid_argument("--omega-t must be >= 0");
  if (cfg.grid_points && *cfg.grid_points < 2) throw std::invalid_argument("--grid-points must be >= 2");
  if (cfg.dim && *cfg.dim < 1) throw std::invalid_argument("--dim must be >= 1");
  if (cfg.u && !(*cfg.u > 0.0)) throw std::invalid_argument("--u must be > 0");
  if (!(cfg.ebar >= 0.0)) throw std::invalid_argument("--ebar must be >= 0");
  if (cfg.t_max && !(*cfg.t_max > 0.0)) throw std::invalid_argument("--t-max must be > 0");
  if (!(cfg.slow_rate > 0.0)) throw std::invalid_argument("--slow-rate must be > 0");
  if (cfg.trajectories < 1) throw std::invalid_argument("--trajectories must be >= 1");
  if (cfg.partitions < 1) throw std::invalid_argument("--partitions must be >= 1");
  if (cfg.format != "csv" && cfg.format != "json") throw std::invalid_argument("--format must be csv or json");
}

}  // namespace wigosc::cli
