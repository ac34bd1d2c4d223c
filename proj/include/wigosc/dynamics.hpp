#pragma once

#include "wigosc/types.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace wigosc {

/// Piecewise-linear function of time, held constant outside its range.
struct TimeTable {
  std::vector<double> times;
  std::vector<double> values;

  double operator()(double t) const;
  void validate() const;
};

/// External force lambda(t) acting on the oscillator.
struct DriveSpec {
  enum class Kind { none, sinusoid, white_noise, custom_table };

  Kind kind = Kind::none;
  double lambda0 = 0.0;  ///< sinusoid amplitude (N)
  double theta = 0.0;    ///< sinusoid phase (rad)
  double mu = 0.0;       ///< white-noise strength (N^2 s)
  TimeTable table;       ///< custom_table samples (N)

  static DriveSpec none() { return {}; }
  /// lambda(t) = lambda0 sin(omega t + theta) at the oscillator frequency.
  static DriveSpec sinusoid(double lambda0, double theta);
  static DriveSpec white_noise(double mu);
  static DriveSpec custom(TimeTable table);

  /// Deterministic force at time t; omega is the oscillator frequency.
  double force(double t, double omega) const;
  void validate() const;
};

/// Frequency modulation omega^2(t) = omega0^2 (1 + epsilon(t)).
struct FrequencyMod {
  enum class Kind { constant, parametric, slow_sinusoid, custom_table };

  Kind kind = Kind::constant;
  double omega0 = 1.0;
  double eps0 = 0.0;       ///< constant offset, or slow_sinusoid amplitude
  double ebar = 0.0;       ///< parametric amplitude
  double detuning = 0.0;   ///< parametric detuning f (rad/s)
  double slow_rate = 0.0;  ///< slow_sinusoid angular rate (rad/s)
  TimeTable table;

  /// epsilon(t) = eps0.
  static FrequencyMod constant(double omega0, double eps0 = 0.0);
  /// epsilon(t) = ebar cos(2 (omega0 + f) t).
  static FrequencyMod parametric(double omega0, double ebar, double detuning = 0.0);
  /// epsilon(t) = eps0 sin(rate t).
  static FrequencyMod slow_sinusoid(double omega0, double eps0, double rate);
  static FrequencyMod custom(double omega0, TimeTable table);

  double epsilon(double t) const;

  /// Parametric growth rate u = ebar omega0 / 4.
  double u() const { return ebar * omega0 / 4.0; }

  /// e(t) = (omega0/2) * integral_0^t epsilon(s) ds.
  double phase_shift(double t) const;

  /// False once |ebar| or |eps0| passes the small-modulation threshold 0.2.
  bool weak_modulation() const;

  void validate() const;
};

/// Detuning interval -2u < f < 2u inside which the averaged parametric motion
/// grows. Only f = 0 has a closed form here; other detunings go through
/// integrate_ode.
constexpr std::pair<double, double> parametric_growth_window(double u) { return {-2.0 * u, 2.0 * u}; }

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> points;
  std::string integrator;
  double step = 0.0;

  const PhasePoint& final_point() const { return points.back(); }
};

/// Exact free motion: the angle advances by omega*t, the radius is untouched.
PolarPoint free_rotation(PolarPoint initial, double omega_t);

/// Closed-form motion under lambda(t) = lambda0 sin(omega t + theta) at the
/// oscillator frequency. Requires drive.kind == sinusoid.
PhasePoint driven_closed_form(PhasePoint initial, const OscillatorSpec& spec, const DriveSpec& drive,
                              double t);

/// Classic fixed-step RK4 for the linear equations of motion with
/// time-dependent frequency and deterministic force. The step is shrunk to
/// t_final / ceil(t_final / dt) so the grid lands on t_final. Every
/// `record_every`-th point is stored, plus the final one.
Trajectory integrate_ode(PhasePoint initial, const OscillatorSpec& spec, const DriveSpec& drive,
                         const FrequencyMod& freq, double t_final, double dt,
                         std::size_t record_every = 1);

/// Phase-space flow map z(t) = M z(0) of the unforced modulated oscillator,
/// obtained by RK4 on the two basis vectors.
Eigen::Matrix2d flow_matrix(const FrequencyMod& freq, double t_final, double dt);

/// Ground-state survival under a linear flow M, by 2-D quadrature of
/// (2/pi) int R dR dphi exp(-R^2 (1 + |M u(phi)|^2)) over the initial plane.
double flow_ground_survival(const Eigen::Matrix2d& flow);

/// One white-noise step: half rotation, momentum kick sqrt(mu dt) * gauss,
/// half rotation. Requires omega*dt <= 0.1.
class LangevinStepper {
 public:
  LangevinStepper(const OscillatorSpec& spec, const NoiseSpec& noise, double dt);

  PhasePoint step(PhasePoint state, double gauss) const {
    const double x1 = cos_half_ * state.x - sin_half_ * state.y;
    const double y1 = sin_half_ * state.x + cos_half_ * state.y;
    const double x2 = x1 + kick_ * gauss;
    return {cos_half_ * x2 - sin_half_ * y1, sin_half_ * x2 + cos_half_ * y1};
  }

  /// Standard deviation of the dimensionless momentum kick per step.
  double kick() const { return kick_; }

 private:
  double cos_half_;
  double sin_half_;
  double kick_;
};

PhasePoint langevin_step(PhasePoint state, const OscillatorSpec& spec, const NoiseSpec& noise,
                         double dt, double gauss);

/// Kicked free particle (omega -> 0), physical units: half drift, kick
/// sqrt(mu dt) * gauss, half drift.
PhysicalPoint free_particle_step(PhysicalPoint state, double mass, double mu, double dt, double gauss);

/// Method-of-averaging result for slow modulation: radius frozen, angle
/// advanced by omega0 t + e(t).
PolarPoint averaged_adiabatic(PolarPoint initial, const FrequencyMod& freq, double t);

/// Averaged parametric motion at zero detuning:
///   r(t) = R0 sqrt(e^{2ut} cos^2(phi0 + pi/4) + e^{-2ut} sin^2(phi0 + pi/4)),
///   tan(theta + pi/4) = e^{-2ut} tan(phi0 + pi/4),
/// returned as (r, theta + omega0 t). The angle is taken from a two-argument
/// arctangent so it stays continuous through the tan singularities. Pass
/// omega0 = 0 for the slow-frame angle theta itself.
PolarPoint averaged_parametric(PolarPoint initial, double u, double omega0, double t);

}  // namespace wigosc
