#include "wigosc/types.hpp"

#include <cmath>

namespace wigosc {

double wrap_angle(double phi) {
  double w = phi - kTwoPi * std::floor((phi + kPi) / kTwoPi);
  // floor() can land exactly on +pi after rounding.
  if (w >= kPi) w -= kTwoPi;
  if (w < -kPi) w = -kPi;
  return w;
}

PolarPoint to_polar(PhasePoint pt) {
  return {std::hypot(pt.x, pt.y), wrap_angle(std::atan2(pt.y, pt.x))};
}

PhasePoint to_cartesian(PolarPoint pt) {
  return {pt.r * std::cos(pt.phi), pt.r * std::sin(pt.phi)};
}

OscillatorSpec::OscillatorSpec(double mass, double omega, double hbar)
    : mass_(mass), omega_(omega), hbar_(hbar), alpha_sq_(mass * omega / hbar) {
  if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !std::isfinite(mass) ||
      !std::isfinite(omega) || !std::isfinite(hbar)) {
    throw std::invalid_argument("OscillatorSpec: mass, omega and hbar must be positive and finite");
  }
}

double OscillatorSpec::alpha() const { return std::sqrt(alpha_sq_); }

PhasePoint OscillatorSpec::to_dimensionless(PhysicalPoint pt) const {
  const double a = alpha();
  return {pt.p / (hbar_ * a), a * pt.q};
}

PhysicalPoint OscillatorSpec::to_physical(PhasePoint pt) const {
  const double a = alpha();
  return {pt.x * hbar_ * a, pt.y / a};
}

NoiseSpec::NoiseSpec(double mu, const OscillatorSpec& spec)
    : mu_(mu), n_param_(mu / (spec.mass() * spec.omega() * spec.omega() * spec.hbar())) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("NoiseSpec: mu must be finite and non-negative");
  }
}

NoiseSpec NoiseSpec::dimensionless(double n_param) {
  if (!(n_param >= 0.0) || !std::isfinite(n_param)) {
    throw std::invalid_argument("NoiseSpec: N must be finite and non-negative");
  }
  return {n_param, n_param};
}

}  // namespace wigosc
