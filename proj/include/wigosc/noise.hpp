#pragma once

// Ensemble averages under a white-noise force, as closed forms in the
// dimensionless noise strength N and elapsed phase omega*t.

#include "wigosc/types.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <functional>

namespace wigosc {

/// The ensemble-averaged propagator is the free rotation by omega*t followed by
/// Gaussian smoothing with this covariance (in x, y).
struct KernelMoments {
  double rotation_angle = 0.0;
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
};

/// Trigonometric integrals over [0, omega t] and the matrix A = I/2 + N S'
/// whose determinant drives the survival and phase-density closed forms.
struct SMatrices {
  double s11 = 0.0;  ///< int cos^2
  double s22 = 0.0;  ///< int sin^2
  double s12 = 0.0;  ///< int sin 2theta
  Eigen::Matrix2d a_matrix = Eigen::Matrix2d::Zero();
  double det_a = 0.0;
};

SMatrices s_matrices(const NoiseSpec& noise, double omega_t);

KernelMoments kernel_moments(const NoiseSpec& noise, double omega_t);

/// Probability of remaining in the ground state,
/// 1 / sqrt((1 + N wt/2)^2 - (N/2)^2 sin^2 wt).
double survival_ground(const NoiseSpec& noise, double omega_t);

/// P(phi, wt) for the ground initial state; P/(2 pi) is a probability density
/// on [-pi, pi).
double phase_density(const NoiseSpec& noise, double omega_t, double phi);

/// int dphi/(2pi) f(phi) P(phi, wt): the averaged expectation of the operator
/// whose Weyl symbol is f(phi), starting from the ground state.
double expect_angle_function(const NoiseSpec& noise, double omega_t,
                             const std::function<double(double)>& f);

/// Long-time limit for an operator whose Weyl symbol depends only on R:
///   int_0^inf dx e^{-x} g(sqrt(x N wt)).
/// Meaningful once N wt is large (roughly >= 1e2); no guard is applied.
double longtime_radial_expectation(const NoiseSpec& noise, double omega_t,
                                   const std::function<double(double)>& g);

/// Long-time limit of <phi^2> for any initial state, using the angle-averaged
/// Weyl transform of phi^2 on a dim-state Fock truncation (dim >= 64).
double longtime_phi_squared(const NoiseSpec& noise, double omega_t, std::size_t dim = 128);

struct FreeParticleMoments {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();           ///< (p, q)
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();     ///< over (p, q)
};

/// Mean and covariance of a kicked free particle after time t, physical units.
FreeParticleMoments free_particle_kernel_moments(const NoiseSpec& noise, const OscillatorSpec& spec,
                                                 double t, PhysicalPoint start = {});

/// Ensemble-averaged |<h_final|U_t|h_initial>|^2. Evaluated as a 2-D adaptive
/// quadrature over the characteristic-function plane, where both Fock
/// projectors are e^{-k^2/4} L_n(k^2/2) and the noise kernel is the Gaussian
/// exp(-k^T C k / 2).
double transition_probability(std::size_t initial_fock, std::size_t final_fock, const NoiseSpec& noise,
                              double omega_t);

}  // namespace wigosc
