#include "wigosc/cli/run.hpp"

#include "wigosc/dynamics.hpp"
#include "wigosc/mc_oracle.hpp"
#include "wigosc/noise.hpp"
#include "wigosc/phase_operator.hpp"
#include "wigosc/quadrature.hpp"
#include "wigosc/types.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace wigosc::cli {

namespace {

constexpr double kOdeStep = 0.01;

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

// Rows are computed on `workers` threads over contiguous index ranges and
// stored by index, so output order never depends on scheduling.
void sweep_rows(Table& t, std::size_t n, std::size_t workers,
                const std::function<std::vector<double>(std::size_t)>& row) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> rows(n);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i) rows[i] = row(i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& r : rows) t.add_row(std::move(r));
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

void record_config(Table& t, const RunConfig& cfg) {
  t.meta = {{"command", cfg.command},
            {"version", kLibraryVersion},
            {"n_param", fmt(cfg.n_param)},
            {"omega_t_max", fmt(cfg.omega_t_max)},
            {"omega_t", fmt(cfg.omega_t)},
            {"grid_points", cfg.grid_points ? std::to_string(*cfg.grid_points) : "default"},
            {"dim", cfg.dim ? std::to_string(*cfg.dim) : "default"},
            {"initial_fock", std::to_string(cfg.initial_fock)},
            {"u", cfg.u ? fmt(*cfg.u) : "default"},
            {"ebar", fmt(cfg.ebar)},
            {"f", fmt(cfg.f)},
            {"t_max", cfg.t_max ? fmt(*cfg.t_max) : "default"},
            {"eps0", fmt(cfg.eps0)},
            {"slow_rate", fmt(cfg.slow_rate)},
            {"seed", std::to_string(cfg.seed)},
            {"trajectories", std::to_string(cfg.trajectories)},
            {"partitions", std::to_string(cfg.partitions)},
            {"format", cfg.format}};
}

Table survival_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  Table t;
  t.columns = {"omega_t[rad]", "survival[1]"};
  for (double wt : grid(0.0, cfg.omega_t_max, cfg.grid_points.value_or(201))) {
    t.add_row({wt, survival_ground(noise, wt)});
  }
  return t;
}

Table phase_dist_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  const std::size_t n = cfg.grid_points.value_or(201);
  Table t;
  t.columns = {"phi[rad]", "P[1]", "density[1/rad]"};
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    const double p = phase_density(noise, cfg.omega_t, phi);
    t.add_row({phi, p, p / kTwoPi});
  }
  return t;
}

Table phase_expect_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  Table t;
  t.columns = {"omega_t[rad]", "mean_phi[rad]", "mean_phi_sq[rad^2]"};
  const auto wts = grid(0.0, cfg.omega_t_max, cfg.grid_points.value_or(201));
  sweep_rows(t, wts.size(), cfg.partitions, [&](std::size_t i) {
    const double wt = wts[i];
    const double m1 = expect_angle_function(noise, wt, [](double p) { return p; });
    const double m2 = expect_angle_function(noise, wt, [](double p) { return p * p; });
    return std::vector<double>{wt, m1, m2};
  });
  return t;
}

Table spectrum_table(const RunConfig& cfg) {
  const auto report = phi_spectrum(cfg.dim.value_or(128));
  Table t;
  t.columns = {"index[1]", "eigenvalue[rad]"};
  for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
    t.add_row({static_cast<double>(i), report.eigenvalues[i]});
  }
  t.meta.emplace_back("spread", fmt(report.spread));
  return t;
}

Table parametric_table(const RunConfig& cfg) {
  double u = cfg.u.value_or(1.0);
  const bool with_flow = cfg.ebar > 0.0;
  if (with_flow) {
    // omega0 = 1 for the full equations of motion.
    const double from_ebar = cfg.ebar / 4.0;
    if (cfg.u && std::abs(*cfg.u - from_ebar) > 1e-12 * from_ebar) {
      throw std::invalid_argument("--u conflicts with --ebar (u = ebar/4 at omega0 = 1)");
    }
    u = from_ebar;
  } else if (cfg.f != 0.0) {
    throw std::invalid_argument("--f needs --ebar: nonzero detuning is only available through the full ODE");
  }
  const double t_max = cfg.t_max.value_or(5.0);
  Table t;
  t.columns = {"ut[1]", "survival_closed[1]", "survival_quadrature[1]"};
  if (with_flow) t.columns.emplace_back("survival_flow[1]");
  const auto freq = FrequencyMod::parametric(1.0, cfg.ebar, cfg.f);
  const auto times = grid(0.0, t_max, cfg.grid_points.value_or(51));
  sweep_rows(t, times.size(), cfg.partitions, [&](std::size_t i) {
    const double time = times[i];
    const double ut = u * time;
    std::vector<double> row = {ut, parametric_survival(ut), parametric_survival_quadrature(ut)};
    if (with_flow) row.push_back(time > 0.0 ? flow_ground_survival(flow_matrix(freq, time, kOdeStep)) : 1.0);
    return row;
  });
  return t;
}

Table adiabatic_table(const RunConfig& cfg) {
  const auto spec = OscillatorSpec::natural();
  const auto freq = FrequencyMod::slow_sinusoid(1.0, cfg.eps0, cfg.slow_rate);
  const double t_max = cfg.t_max.value_or(kTwoPi / cfg.slow_rate);
  const std::size_t n = cfg.grid_points.value_or(201);
  const double interval = t_max / static_cast<double>(n - 1);
  const auto per = static_cast<std::size_t>(std::ceil(interval / kOdeStep));
  const double dt = interval / static_cast<double>(per);
  const PolarPoint start{1.0, 0.0};
  const auto traj =
      integrate_ode(to_cartesian(start), spec, DriveSpec::none(), freq, t_max, dt, per);
  Table t;
  t.columns = {"t[s]", "phase_error[rad]", "amplitude_drift[1]"};
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    const PolarPoint exact = to_polar(traj.points[i]);
    const PolarPoint avg = averaged_adiabatic(start, freq, traj.times[i]);
    t.add_row({traj.times[i], wrap_angle(exact.phi - avg.phi), exact.r / start.r - 1.0});
  }
  return t;
}

Table kernel_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  Table t;
  t.columns = {"omega_t[rad]", "rotation[rad]", "cov_xx[1]", "cov_xy[1]", "cov_yy[1]"};
  for (double wt : grid(0.0, cfg.omega_t_max, cfg.grid_points.value_or(201))) {
    const auto k = kernel_moments(noise, wt);
    t.add_row({wt, k.rotation_angle, k.covariance(0, 0), k.covariance(0, 1), k.covariance(1, 1)});
  }
  return t;
}

Table transition_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  Table t;
  t.columns = {"final_fock[1]", "probability[1]"};
  const std::size_t count = cfg.dim.value_or(41);
  sweep_rows(t, count, cfg.partitions, [&](std::size_t n) {
    return std::vector<double>{static_cast<double>(n),
                               transition_probability(cfg.initial_fock, n, noise, cfg.omega_t)};
  });
  return t;
}

Table mc_check_table(const RunConfig& cfg) {
  const auto noise = NoiseSpec::dimensionless(cfg.n_param);
  EnsembleConfig ens;
  ens.trajectories = cfg.trajectories;
  ens.seed = cfg.seed;
  ens.partitions = cfg.partitions;
  Table t;
  t.columns = {"omega_t[rad]", "survival_closed[1]", "survival_mc[1]", "std_error[1]", "z_score[1]"};
  for (double wt : grid(0.0, cfg.omega_t_max, cfg.grid_points.value_or(5))) {
    const double closed = survival_ground(noise, wt);
    const Estimate est = estimate_survival(noise, wt, ens);
    const double z = est.std_error > 0.0 ? (est.value - closed) / est.std_error : 0.0;
    t.add_row({wt, closed, est.value, est.std_error, z});
  }
  return t;
}

void emit(const Table& t, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") write_json(os, t);
  else write_csv(os, t);
}

}  // namespace

double parametric_survival(double u_t) {
  if (!(u_t >= 0.0)) throw std::invalid_argument("parametric_survival: ut must be >= 0");
  return 1.0 / std::cosh(u_t);
}

double parametric_survival_quadrature(double u_t) {
  if (!(u_t >= 0.0)) throw std::invalid_argument("parametric_survival: ut must be >= 0");
  const double grow = std::exp(2.0 * u_t);
  const double shrink = 1.0 / grow;
  // With psi = phi + pi/4 the integrand is even and pi-periodic in psi. In
  // delta = pi/2 - psi it peaks at delta = 0 with width ~ e^{-ut}, so the
  // range is cut at geometrically growing multiples of that width.
  auto integrand = [&](double delta) {
    const double c = std::sin(delta);
    const double s = std::cos(delta);
    return 1.0 / (1.0 + grow * c * c + shrink * s * s);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-16;
  const double width = std::sqrt((1.0 + shrink) / (1.0 + grow));
  double total = 0.0;
  double lo = 0.0;
  for (double hi = width; lo < 0.5 * kPi; hi *= 4.0) {
    const double top = std::min(hi, 0.5 * kPi);
    total += integrate(integrand, lo, top, opts).value;
    lo = top;
  }
  return 4.0 / kPi * total;
}

Table build_table(const RunConfig& cfg) {
  validate(cfg);
  Table t;
  const std::string& c = cfg.command;
  if (c == "survival") t = survival_table(cfg);
  else if (c == "phase-dist") t = phase_dist_table(cfg);
  else if (c == "phase-expect") t = phase_expect_table(cfg);
  else if (c == "spectrum") t = spectrum_table(cfg);
  else if (c == "parametric") t = parametric_table(cfg);
  else if (c == "adiabatic") t = adiabatic_table(cfg);
  else if (c == "kernel") t = kernel_table(cfg);
  else if (c == "transition") t = transition_table(cfg);
  else if (c == "mc-check") t = mc_check_table(cfg);
  else throw std::invalid_argument("unknown command");
  auto extra = std::move(t.meta);
  record_config(t, cfg);
  for (auto& kv : extra) t.meta.push_back(std::move(kv));
  return t;
}

int run(const RunConfig& cfg, std::ostream& diag) {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
    diag << "error: unknown command '" << cfg.command << "'\n";
    return kUnknownCommand;
  }
  Table table;
  try {
    table = build_table(cfg);
  } catch (const ConvergenceError& e) {
    diag << "convergence failure: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const std::invalid_argument& e) {
    diag << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::domain_error& e) {
    diag << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    diag << "internal error: " << e.what() << '\n';
    return kInternalError;
  }

  if (cfg.output == "-") {
    emit(table, cfg, std::cout);
    std::cout.flush();
    if (!std::cout) {
      diag << "output error: failed writing to standard output\n";
      return kOutputError;
    }
    return kOk;
  }
  std::ofstream out(cfg.output);
  if (!out) {
    diag << "output error: cannot open '" << cfg.output << "' for writing\n";
    return kOutputError;
  }
  emit(table, cfg, out);
  out.close();
  if (!out) {
    diag << "output error: failed writing '" << cfg.output << "'\n";
    return kOutputError;
  }
  return kOk;
}

}  // namespace wigosc::cli
