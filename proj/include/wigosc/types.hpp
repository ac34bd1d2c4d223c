#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace wigosc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when an adaptive integration, series, or eigensolve fails to reach
/// its requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrap an angle into [-pi, pi).
double wrap_angle(double phi);

/// Dimensionless phase-plane point: x = p/(hbar*alpha), y = alpha*q.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Polar form of a PhasePoint, x + i y = r e^{i phi}.
struct PolarPoint {
  double r = 0.0;
  double phi = 0.0;
};

PolarPoint to_polar(PhasePoint pt);
PhasePoint to_cartesian(PolarPoint pt);

/// Momentum/position pair in physical units.
struct PhysicalPoint {
  double p = 0.0;
  double q = 0.0;
};

/// Mass, frequency and hbar of the oscillator. alpha^2 = m*omega/hbar sets the
/// length scale used by every dimensionless coordinate in the library.
class OscillatorSpec {
 public:
  OscillatorSpec(double mass, double omega, double hbar);

  /// m = omega = hbar = 1.
  static OscillatorSpec natural() { return {1.0, 1.0, 1.0}; }

  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double alpha_sq() const { return alpha_sq_; }
  double alpha() const;

  double period() const { return kTwoPi / omega_; }

  PhasePoint to_dimensionless(PhysicalPoint pt) const;
  PhysicalPoint to_physical(PhasePoint pt) const;

 private:
  double mass_;
  double omega_;
  double hbar_;
  double alpha_sq_;
};

/// White-noise force strength. mu is the delta-correlation strength of the
/// force (N^2 s); n_param = mu/(m omega^2 hbar) is the dimensionless form
/// every closed-form result depends on.
class NoiseSpec {
 public:
  NoiseSpec(double mu, const OscillatorSpec& spec);

  /// Noise given directly by its dimensionless strength; mu is then expressed
  /// in natural units (m = omega = hbar = 1).
  static NoiseSpec dimensionless(double n_param);

  double mu() const { return mu_; }
  double n_param() const { return n_param_; }

 private:
  NoiseSpec(double mu, double n_param) : mu_(mu), n_param_(n_param) {}

  double mu_;
  double n_param_;
};

}  // namespace wigosc
