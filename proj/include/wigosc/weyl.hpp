#pragma once

#include "wigosc/types.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstddef>

namespace wigosc {

/// <h_m| Delta(R, phi) |h_n>, the Fock-basis matrix element of the Weyl
/// kernel at polar point (R, phi). Phase convention: x + i y = R e^{i phi}
/// with x the scaled momentum, which fixes the i^{|m-n|} factor.
std::complex<double> delta_matrix_element(std::size_t m, std::size_t n, PolarPoint pt);

/// Weyl transform of the Fock projector |h_n><h_n|: 2 (-1)^n e^{-R^2} L_n(2R^2).
double fock_projector_transform(std::size_t n, double r);

/// Weyl transform of exp(-beta H) for the free oscillator at radius r.
double thermal_weyl_transform(double beta, const OscillatorSpec& spec, double r);

/// Integral over R^2 of exp(-x^T A x / 2 + i J^T x), i.e.
/// 2 pi / sqrt(det A) * exp(-J^T A^{-1} J / 2). Throws std::domain_error when A
/// is not symmetric positive definite.
double gaussian_quadratic_integral(const Eigen::Matrix2d& a, const Eigen::Vector2d& j);

}  // namespace wigosc
