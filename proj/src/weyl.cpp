#include "wigosc/weyl.hpp"

#include "wigosc/special.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wigosc {

namespace {

std::complex<double> i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::complex<double> delta_matrix_element(std::size_t m, std::size_t n, PolarPoint pt) {
  const std::size_t lo = std::min(m, n);
  const std::size_t hi = std::max(m, n);
  const std::size_t d = hi - lo;
  const double r = pt.r;
  const double r2 = r * r;

  const double lag = laguerre(lo, d, 2.0 * r2);
  double magnitude = 0.0;
  if (d == 0) {
    magnitude = std::exp(-r2) * lag;
  } else if (r > 0.0) {
    const double dd = static_cast<double>(d);
    const double log_mag = 0.5 * dd * std::log(2.0) + 0.5 * (log_factorial(lo) - log_factorial(hi)) +
                           dd * std::log(r) - r2;
    magnitude = std::exp(log_mag) * lag;
  }
  const double sign = (n % 2 == 0) ? 2.0 : -2.0;
  const double angle = (static_cast<double>(n) - static_cast<double>(m)) * pt.phi;
  return sign * magnitude * i_power(d) * std::polar(1.0, angle);
}

double fock_projector_transform(std::size_t n, double r) {
  const double r2 = r * r;
  const double sign = (n % 2 == 0) ? 2.0 : -2.0;
  return sign * std::exp(-r2) * laguerre(n, 0, 2.0 * r2);
}

double thermal_weyl_transform(double beta, const OscillatorSpec& spec, double r) {
  if (!(beta >= 0.0)) throw std::invalid_argument("thermal_weyl_transform: beta must be >= 0");
  const double half = 0.5 * spec.hbar() * spec.omega() * beta;
  return std::exp(-r * r * std::tanh(half)) / std::cosh(half);
}

double gaussian_quadratic_integral(const Eigen::Matrix2d& a, const Eigen::Vector2d& j) {
  const double asym = std::abs(a(0, 1) - a(1, 0));
  if (asym > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    throw std::domain_error("gaussian_quadratic_integral: matrix is not symmetric");
  }
  const double det = a.determinant();
  if (!(a(0, 0) > 0.0) || !(det > 0.0)) {
    throw std::domain_error("gaussian_quadratic_integral: matrix is not positive definite");
  }
  const double quad = j.dot(a.inverse() * j);
  return kTwoPi / std::sqrt(det) * std::exp(-0.5 * quad);
}

}  // namespace wigosc
