#include "wigosc/dynamics.hpp"

#include "wigosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace wigosc {

namespace {

constexpr double kWeakModulation = 0.2;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

std::size_t step_count(double t_final, double dt) {
  const double n = std::ceil(t_final / dt - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, n));
}

}  // namespace

double TimeTable::operator()(double t) const {
  if (times.empty()) return 0.0;
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const auto i = static_cast<std::size_t>(it - times.begin());
  const double w = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return (1.0 - w) * values[i - 1] + w * values[i];
}

void TimeTable::validate() const {
  if (times.size() != values.size() || times.empty()) {
    throw std::invalid_argument("TimeTable: times and values must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    require_finite(times[i], "TimeTable time");
    require_finite(values[i], "TimeTable value");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("TimeTable: times must be strictly increasing");
    }
  }
}

DriveSpec DriveSpec::sinusoid(double lambda0, double theta) {
  DriveSpec d;
  d.kind = Kind::sinusoid;
  d.lambda0 = lambda0;
  d.theta = theta;
  return d;
}

DriveSpec DriveSpec::white_noise(double mu) {
  DriveSpec d;
  d.kind = Kind::white_noise;
  d.mu = mu;
  return d;
}

DriveSpec DriveSpec::custom(TimeTable table) {
  DriveSpec d;
  d.kind = Kind::custom_table;
  d.table = std::move(table);
  return d;
}

double DriveSpec::force(double t, double omega) const {
  switch (kind) {
    case Kind::none: return 0.0;
    case Kind::sinusoid: return lambda0 * std::sin(omega * t + theta);
    case Kind::custom_table: return table(t);
    case Kind::white_noise: break;
  }
  throw std::invalid_argument("DriveSpec: white noise has no deterministic force; use langevin_step");
}

void DriveSpec::validate() const {
  require_finite(lambda0, "drive lambda0");
  require_finite(theta, "drive theta");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::invalid_argument("drive mu must be >= 0");
  if (kind == Kind::custom_table) table.validate();
}

FrequencyMod FrequencyMod::constant(double omega0, double eps0) {
  FrequencyMod f;
  f.kind = Kind::constant;
  f.omega0 = omega0;
  f.eps0 = eps0;
  return f;
}

FrequencyMod FrequencyMod::parametric(double omega0, double ebar, double detuning) {
  FrequencyMod f;
  f.kind = Kind::parametric;
  f.omega0 = omega0;
  f.ebar = ebar;
  f.detuning = detuning;
  return f;
}

FrequencyMod FrequencyMod::slow_sinusoid(double omega0, double eps0, double rate) {
  FrequencyMod f;
  f.kind = Kind::slow_sinusoid;
  f.omega0 = omega0;
  f.eps0 = eps0;
  f.slow_rate = rate;
  return f;
}

FrequencyMod FrequencyMod::custom(double omega0, TimeTable table) {
  FrequencyMod f;
  f.kind = Kind::custom_table;
  f.omega0 = omega0;
  f.table = std::move(table);
  return f;
}

double FrequencyMod::epsilon(double t) const {
  switch (kind) {
    case Kind::constant: return eps0;
    case Kind::parametric: return ebar * std::cos(2.0 * (omega0 + detuning) * t);
    case Kind::slow_sinusoid: return eps0 * std::sin(slow_rate * t);
    case Kind::custom_table: return table(t);
  }
  return 0.0;
}

double FrequencyMod::phase_shift(double t) const {
  switch (kind) {
    case Kind::constant: return 0.5 * omega0 * eps0 * t;
    case Kind::parametric: {
      const double w = 2.0 * (omega0 + detuning);
      return 0.5 * omega0 * ebar * std::sin(w * t) / w;
    }
    case Kind::slow_sinusoid:
      if (slow_rate == 0.0) return 0.0;
      return 0.5 * omega0 * eps0 * (1.0 - std::cos(slow_rate * t)) / slow_rate;
    case Kind::custom_table: {
      if (t == 0.0) return 0.0;
      const auto r = integrate([this](double s) { return table(s); }, 0.0, t);
      return 0.5 * omega0 * r.value;
    }
  }
  return 0.0;
}

bool FrequencyMod::weak_modulation() const {
  return std::abs(ebar) <= kWeakModulation && std::abs(eps0) <= kWeakModulation;
}

void FrequencyMod::validate() const {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw std::invalid_argument("omega0 must be positive");
  require_finite(eps0, "eps0");
  require_finite(ebar, "ebar");
  require_finite(detuning, "detuning");
  require_finite(slow_rate, "slow_rate");
  if (kind == Kind::custom_table) table.validate();
}

PolarPoint free_rotation(PolarPoint initial, double omega_t) {
  return {initial.r, wrap_angle(initial.phi + omega_t)};
}

PhasePoint driven_closed_form(PhasePoint initial, const OscillatorSpec& spec, const DriveSpec& drive,
                              double t) {
  if (drive.kind != DriveSpec::Kind::sinusoid) {
    throw std::invalid_argument("driven_closed_form: drive must be a sinusoid");
  }
  using C = std::complex<double>;
  const double w = spec.omega();
  const double wt = w * t;
  const C z0(initial.x, initial.y);
  const C i(0.0, 1.0);
  const C pref = i * drive.lambda0 / (2.0 * spec.alpha() * spec.hbar() * w);
  const C z = z0 * std::polar(1.0, wt) +
              pref * (wt * std::polar(1.0, wt + drive.theta) - std::sin(wt) * std::polar(1.0, -drive.theta));
  return {z.real(), z.imag()};
}

Trajectory integrate_ode(PhasePoint initial, const OscillatorSpec& spec, const DriveSpec& drive,
                         const FrequencyMod& freq, double t_final, double dt, std::size_t record_every) {
  if (drive.kind == DriveSpec::Kind::white_noise) {
    throw std::invalid_argument("integrate_ode: white-noise drive is stochastic; use langevin_step");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("integrate_ode: dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("integrate_ode: t_final must be finite and >= 0");
  }
  require_finite(initial.x, "initial x");
  require_finite(initial.y, "initial y");
  drive.validate();
  freq.validate();
  if (std::abs(freq.omega0 - spec.omega()) > 1e-12 * spec.omega()) {
    throw std::invalid_argument("integrate_ode: FrequencyMod omega0 must equal the oscillator omega");
  }
  if (record_every == 0) record_every = 1;

  const double w0 = freq.omega0;
  const double force_scale = 1.0 / (spec.alpha() * spec.hbar());
  auto rhs = [&](double t, double x, double y, double& dx, double& dy) {
    const double w2_over_w0 = w0 * (1.0 + freq.epsilon(t));
    dx = -w2_over_w0 * y - force_scale * drive.force(t, w0);
    dy = w0 * x;
  };

  Trajectory traj;
  traj.integrator = "rk4";
  const std::size_t n = t_final > 0.0 ? step_count(t_final, dt) : 0;
  const double h = n > 0 ? t_final / static_cast<double>(n) : dt;
  traj.step = h;
  traj.times.reserve(n / record_every + 2);
  traj.points.reserve(n / record_every + 2);
  traj.times.push_back(0.0);
  traj.points.push_back(initial);

  double x = initial.x;
  double y = initial.y;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * h;
    double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    rhs(t, x, y, k1x, k1y);
    rhs(t + 0.5 * h, x + 0.5 * h * k1x, y + 0.5 * h * k1y, k2x, k2y);
    rhs(t + 0.5 * h, x + 0.5 * h * k2x, y + 0.5 * h * k2y, k3x, k3y);
    rhs(t + h, x + h * k3x, y + h * k3y, k4x, k4y);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    if ((k + 1) % record_every == 0 || k + 1 == n) {
      traj.times.push_back(k + 1 == n ? t_final : static_cast<double>(k + 1) * h);
      traj.points.push_back({x, y});
    }
  }
  return traj;
}

Eigen::Matrix2d flow_matrix(const FrequencyMod& freq, double t_final, double dt) {
  const OscillatorSpec spec(1.0, freq.omega0, 1.0);
  const auto nothing = DriveSpec::none();
  // Only the endpoint is needed.
  const std::size_t skip = std::numeric_limits<std::size_t>::max();
  const PhasePoint c0 = integrate_ode({1.0, 0.0}, spec, nothing, freq, t_final, dt, skip).final_point();
  const PhasePoint c1 = integrate_ode({0.0, 1.0}, spec, nothing, freq, t_final, dt, skip).final_point();
  Eigen::Matrix2d m;
  m << c0.x, c1.x, c0.y, c1.y;
  return m;
}

double flow_ground_survival(const Eigen::Matrix2d& flow) {
  // Radial cutoff 12: the integrand carries exp(-R^2).
  constexpr double kRadialCutoff = 12.0;
  auto integrand = [&flow](double phi, double r) {
    const Eigen::Vector2d u(std::cos(phi), std::sin(phi));
    const double stretch = (flow * u).squaredNorm();
    return r * std::exp(-r * r * (1.0 + stretch));
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.abs_tol = 1e-12;
  const auto res = integrate_2d(integrand, -kPi, kPi, 0.0, kRadialCutoff, opts);
  return 2.0 / kPi * res.value;
}

LangevinStepper::LangevinStepper(const OscillatorSpec& spec, const NoiseSpec& noise, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("langevin_step: dt must be positive");
  if (spec.omega() * dt > 0.1 * (1.0 + 1e-12)) {
    throw std::invalid_argument("langevin_step: omega*dt must not exceed 0.1");
  }
  const double half = 0.5 * spec.omega() * dt;
  cos_half_ = std::cos(half);
  sin_half_ = std::sin(half);
  kick_ = std::sqrt(noise.mu() * dt) / (spec.hbar() * spec.alpha());
}

PhasePoint langevin_step(PhasePoint state, const OscillatorSpec& spec, const NoiseSpec& noise, double dt,
                         double gauss) {
  return LangevinStepper(spec, noise, dt).step(state, gauss);
}

PhysicalPoint free_particle_step(PhysicalPoint state, double mass, double mu, double dt, double gauss) {
  if (!(mass > 0.0) || !(dt > 0.0) || !(mu >= 0.0)) {
    throw std::invalid_argument("free_particle_step: need mass > 0, dt > 0, mu >= 0");
  }
  const double half_drift = 0.5 * dt / mass;
  double q = state.q + half_drift * state.p;
  const double p = state.p + std::sqrt(mu * dt) * gauss;
  q += half_drift * p;
  return {p, q};
}

PolarPoint averaged_adiabatic(PolarPoint initial, const FrequencyMod& freq, double t) {
  return {initial.r, wrap_angle(initial.phi + freq.omega0 * t + freq.phase_shift(t))};
}

PolarPoint averaged_parametric(PolarPoint initial, double u, double omega0, double t) {
  if (!(u >= 0.0)) throw std::invalid_argument("averaged_parametric: u must be >= 0");
  const double shifted = initial.phi + 0.25 * kPi;
  const double grow = std::exp(u * t);
  const std::complex<double> z(grow * std::cos(shifted), std::sin(shifted) / grow);
  const double theta = std::arg(z) - 0.25 * kPi;
  return {initial.r * std::abs(z), wrap_angle(theta + omega0 * t)};
}

}  // namespace wigosc
