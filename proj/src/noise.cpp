#include "wigosc/noise.hpp"

#include "wigosc/phase_operator.hpp"
#include "wigosc/quadrature.hpp"
#include "wigosc/special.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wigosc {

namespace {

constexpr double kPiSquaredOverThree = kPi * kPi / 3.0;

void require_time(double omega_t) {
  if (!(omega_t >= 0.0) || !std::isfinite(omega_t)) {
    throw std::invalid_argument("omega_t must be finite and >= 0");
  }
}

double phase_density_unchecked(double n, double omega_t, double phi) {
  const double growth = 1.0 + n * omega_t;
  const double swing = n * std::sin(omega_t);
  return std::sqrt(growth * growth - swing * swing) / (growth - swing * std::cos(2.0 * phi - omega_t));
}

// int_0^inf e^{-x} g(sqrt(x N wt)) dx, split at x_split so that structure in
// g near the origin is resolved on a finite interval.
double radial_long_time_integral(double n_wt, const std::function<double(double)>& g, double x_split,
                                 QuadratureOptions opts) {
  auto integrand = [&](double x) { return std::exp(-x) * g(std::sqrt(x * n_wt)); };
  const double head = integrate(integrand, 0.0, x_split, opts).value;
  const double tail = integrate(integrand, x_split, kInfinity, opts).value;
  return head + tail;
}

}  // namespace

SMatrices s_matrices(const NoiseSpec& noise, double omega_t) {
  require_time(omega_t);
  const double n = noise.n_param();
  const double sin_wt = std::sin(omega_t);
  SMatrices s;
  s.s11 = 0.5 * omega_t + 0.25 * std::sin(2.0 * omega_t);
  s.s22 = 0.5 * omega_t - 0.25 * std::sin(2.0 * omega_t);
  s.s12 = sin_wt * sin_wt;
  s.a_matrix << 0.5 + n * s.s11, 0.5 * n * s.s12, 0.5 * n * s.s12, 0.5 + n * s.s22;
  s.det_a = s.a_matrix.determinant();
  return s;
}

KernelMoments kernel_moments(const NoiseSpec& noise, double omega_t) {
  const SMatrices s = s_matrices(noise, omega_t);
  const double n = noise.n_param();
  KernelMoments k;
  k.rotation_angle = omega_t;
  k.covariance << n * s.s11, 0.5 * n * s.s12, 0.5 * n * s.s12, n * s.s22;
  return k;
}

double survival_ground(const NoiseSpec& noise, double omega_t) {
  require_time(omega_t);
  const double n = noise.n_param();
  const double a = 1.0 + 0.5 * n * omega_t;
  const double b = 0.5 * n * std::sin(omega_t);
  return 1.0 / std::sqrt(a * a - b * b);
}

double phase_density(const NoiseSpec& noise, double omega_t, double phi) {
  require_time(omega_t);
  if (!(phi >= -kPi && phi < kPi)) throw std::invalid_argument("phase_density: phi must lie in [-pi, pi)");
  return phase_density_unchecked(noise.n_param(), omega_t, phi);
}

double expect_angle_function(const NoiseSpec& noise, double omega_t, const std::function<double(double)>& f) {
  require_time(omega_t);
  const double n = noise.n_param();
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-9;
  const auto res = integrate(
      [&](double phi) { return f(phi) * phase_density_unchecked(n, omega_t, phi) / kTwoPi; }, -kPi, kPi,
      opts);
  return res.value;
}

double longtime_radial_expectation(const NoiseSpec& noise, double omega_t,
                                   const std::function<double(double)>& g) {
  require_time(omega_t);
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-13;
  return radial_long_time_integral(noise.n_param() * omega_t, g, 1.0, opts);
}

double longtime_phi_squared(const NoiseSpec& noise, double omega_t, std::size_t dim) {
  require_time(omega_t);
  if (dim < 64) throw std::invalid_argument("longtime_phi_squared: dim must be >= 64");
  const double n_wt = noise.n_param() * omega_t;
  if (!(n_wt > 0.0)) throw std::invalid_argument("longtime_phi_squared: N*omega_t must be positive");

  const PhiSquaredRadialProfile profile(dim);
  // Laguerre functions e^{-v/2} L_m(v) are exponentially small once
  // v = 2R^2 is well past the turning point 4m + 2.
  const double d = static_cast<double>(dim);
  const double r2_cut = 2.0 * d + 20.0 * std::sqrt(d) + 50.0;
  const double x_cut = r2_cut / n_wt;

  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.abs_tol = 1e-12;
  auto excess = [&](double x) {
    return std::exp(-x) * (profile(std::sqrt(x * n_wt)).value - kPiSquaredOverThree);
  };
  auto unresolved = [&](double x) { return std::exp(-x) * profile(std::sqrt(x * n_wt)).last_term; };
  const double correction = integrate(excess, 0.0, x_cut, opts).value;

  QuadratureOptions loose;
  loose.rel_tol = 1e-6;
  loose.abs_tol = 1e-8;
  const double indicator = integrate(unresolved, 0.0, x_cut, loose).value;
  constexpr double kIndicatorTolerance = 1e-2;
  if (indicator > kIndicatorTolerance) {
    std::ostringstream msg;
    msg << "longtime_phi_squared: truncated series unresolved (weighted last-term " << indicator
        << " > " << kIndicatorTolerance << "); increase dim or N*omega_t";
    throw ConvergenceError(msg.str());
  }
  return kPiSquaredOverThree + correction;
}

FreeParticleMoments free_particle_kernel_moments(const NoiseSpec& noise, const OscillatorSpec& spec, double t,
                                                 PhysicalPoint start) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("t must be finite and >= 0");
  const double mu = noise.mu();
  const double m = spec.mass();
  FreeParticleMoments out;
  out.mean << start.p, start.q + start.p * t / m;
  out.covariance << mu * t, mu * t * t / (2.0 * m), mu * t * t / (2.0 * m), mu * t * t * t / (3.0 * m * m);
  return out;
}

double transition_probability(std::size_t initial_fock, std::size_t final_fock, const NoiseSpec& noise,
                              double omega_t) {
  const Eigen::Matrix2d c = kernel_moments(noise, omega_t).covariance;
  const std::size_t top = std::max(initial_fock, final_fock);
  const double v_max = 4.0 * static_cast<double>(top) + 80.0;
  const double k_max = std::sqrt(2.0 * v_max);

  // (1/2pi) int d^2k e^{-k^2/2} L_m(k^2/2) L_n(k^2/2) exp(-k^T C k / 2); the
  // integrand is pi-periodic in the polar angle.
  auto integrand = [&](double theta, double k) {
    const double v = 0.5 * k * k;
    const auto lag = laguerre_function_sequence(top + 1, v);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double spread = c(0, 0) * ct * ct + 2.0 * c(0, 1) * ct * st + c(1, 1) * st * st;
    return k * lag[initial_fock] * lag[final_fock] * std::exp(-v * spread);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.abs_tol = 1e-11;
  const auto res = integrate_2d(integrand, 0.0, kPi, 0.0, k_max, opts);
  return res.value / kPi;
}

}  // namespace wigosc
