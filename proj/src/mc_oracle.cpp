#include "wigosc/mc_oracle.hpp"

#include "wigosc/dynamics.hpp"
#include "wigosc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wigosc {

namespace {

std::size_t noisy_steps(double omega_t, const EnsembleConfig& cfg) {
  const double n = std::ceil(omega_t / (kTwoPi * cfg.dt_fraction) - 1e-9);
  return static_cast<std::size_t>(std::max(0.0, n));
}

void require_time(double omega_t) {
  if (!(omega_t >= 0.0) || !std::isfinite(omega_t)) throw std::invalid_argument("omega_t must be finite and >= 0");
}

// Sample covariance entry from centred products, with the n/(n-1) correction.
Estimate covariance_entry(const std::vector<double>& data, std::size_t width, std::size_t a, std::size_t b,
                          double mean_a, double mean_b) {
  const std::size_t n = data.size() / width;
  std::vector<double> prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = (data[i * width + a] - mean_a) * (data[i * width + b] - mean_b);
  Estimate e = estimate_from(prod);
  if (n > 1) e.value *= static_cast<double>(n) / static_cast<double>(n - 1);
  return e;
}

std::vector<double> column(const std::vector<double>& data, std::size_t width, std::size_t k) {
  std::vector<double> out(data.size() / width);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data[i * width + k];
  return out;
}

}  // namespace

void EnsembleConfig::validate() const {
  if (trajectories < 1) throw std::invalid_argument("EnsembleConfig: trajectories must be >= 1");
  if (!(dt_fraction > 0.0) || dt_fraction > kMaxDtFraction * (1.0 + 1e-12)) {
    throw std::invalid_argument("EnsembleConfig: dt_fraction must lie in (0, 0.1/(2 pi)]");
  }
  if (partitions < 1) throw std::invalid_argument("EnsembleConfig: partitions must be >= 1");
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Estimate estimate_from(std::span<const double> values) {
  Estimate e;
  e.trajectories = values.size();
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  e.value = pairwise_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dev[i] = (values[i] - e.value) * (values[i] - e.value);
    const double var = pairwise_sum(dev) / (n - 1.0);
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

std::vector<double> run_ensemble(const EnsembleConfig& cfg, std::size_t width,
                                 const std::function<void(std::size_t, NormalStream&, double*)>& fn) {
  cfg.validate();
  std::vector<double> data(cfg.trajectories * width);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      NormalStream stream(cfg.seed, i);
      fn(i, stream, data.data() + i * width);
    }
  };
  const std::size_t parts = std::min(cfg.partitions, cfg.trajectories);
  if (parts <= 1) {
    work(0, cfg.trajectories);
    return data;
  }
  std::vector<std::thread> workers;
  workers.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t begin = cfg.trajectories * p / parts;
    const std::size_t end = cfg.trajectories * (p + 1) / parts;
    workers.emplace_back(work, begin, end);
  }
  for (auto& w : workers) w.join();
  return data;
}

PhasePoint evolve_noisy(PhasePoint start, const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg,
                        NormalStream& stream) {
  const std::size_t steps = noisy_steps(omega_t, cfg);
  if (steps == 0) return start;
  const double dt = omega_t / static_cast<double>(steps);
  const LangevinStepper stepper(OscillatorSpec::natural(), NoiseSpec::dimensionless(noise.n_param()), dt);
  PhasePoint z = start;
  for (std::size_t k = 0; k < steps; ++k) z = stepper.step(z, stream.next());
  return z;
}

Estimate estimate_survival(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg) {
  require_time(omega_t);
  const auto data = run_ensemble(cfg, 1, [&](std::size_t, NormalStream& s, double* out) {
    const double g1 = s.next();
    const double g2 = s.next();
    const PhasePoint z = evolve_noisy(sample_ground_wigner(g1, g2), noise, omega_t, cfg, s);
    out[0] = 2.0 * std::exp(-(z.x * z.x + z.y * z.y));
  });
  return estimate_from(data);
}

PhaseMoments estimate_phase_moments(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg) {
  require_time(omega_t);
  const auto data = run_ensemble(cfg, 2, [&](std::size_t, NormalStream& s, double* out) {
    const double g1 = s.next();
    const double g2 = s.next();
    const PhasePoint z = evolve_noisy(sample_ground_wigner(g1, g2), noise, omega_t, cfg, s);
    const double phi = wrap_angle(std::atan2(z.y, z.x));
    out[0] = phi;
    out[1] = phi * phi;
  });
  PhaseMoments pm;
  pm.mean_phi = estimate_from(column(data, 2, 0));
  pm.phi_squared = estimate_from(column(data, 2, 1));
  return pm;
}

KernelEstimate estimate_kernel_moments(const NoiseSpec& noise, double omega_t, const EnsembleConfig& cfg,
                                       PhasePoint fixed_start) {
  require_time(omega_t);
  const auto data = run_ensemble(cfg, 2, [&](std::size_t, NormalStream& s, double* out) {
    const PhasePoint z = evolve_noisy(fixed_start, noise, omega_t, cfg, s);
    out[0] = z.x;
    out[1] = z.y;
  });
  KernelEstimate k;
  k.mean[0] = estimate_from(column(data, 2, 0));
  k.mean[1] = estimate_from(column(data, 2, 1));
  k.cov_xx = covariance_entry(data, 2, 0, 0, k.mean[0].value, k.mean[0].value);
  k.cov_xy = covariance_entry(data, 2, 0, 1, k.mean[0].value, k.mean[1].value);
  k.cov_yy = covariance_entry(data, 2, 1, 1, k.mean[1].value, k.mean[1].value);
  return k;
}

FreeParticleEstimate estimate_free_particle_moments(double mu, double mass, double t, const EnsembleConfig& cfg,
                                                    PhysicalPoint start) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be finite and >= 0");
  if (!(mass > 0.0) || !(mu >= 0.0)) throw std::invalid_argument("need mass > 0 and mu >= 0");
  const auto steps = static_cast<std::size_t>(std::llround(1.0 / cfg.dt_fraction));
  const double dt = t / static_cast<double>(steps);
  const auto data = run_ensemble(cfg, 2, [&](std::size_t, NormalStream& s, double* out) {
    PhysicalPoint z = start;
    if (t > 0.0) {
      for (std::size_t k = 0; k < steps; ++k) z = free_particle_step(z, mass, mu, dt, s.next());
    }
    out[0] = z.p;
    out[1] = z.q;
  });
  FreeParticleEstimate e;
  e.mean_p = estimate_from(column(data, 2, 0));
  e.mean_q = estimate_from(column(data, 2, 1));
  e.var_p = covariance_entry(data, 2, 0, 0, e.mean_p.value, e.mean_p.value);
  e.cov_pq = covariance_entry(data, 2, 0, 1, e.mean_p.value, e.mean_q.value);
  e.var_q = covariance_entry(data, 2, 1, 1, e.mean_q.value, e.mean_q.value);
  return e;
}

}  // namespace wigosc
