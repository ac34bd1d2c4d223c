#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <vector>

namespace wigosc {

/// Fock truncation used wherever a caller does not pick one.
inline constexpr std::size_t kDefaultFockDim = 256;
inline constexpr std::size_t kDefaultTailTerms = 20000;
/// Partial sums averaged when summing the alternating Laguerre series.
inline constexpr std::size_t kCesaroWindow = 16;

/// Dense operator on the truncated Fock basis |h_0> ... |h_{dim-1}>.
class FockMatrix {
 public:
  FockMatrix(Eigen::MatrixXcd entries, bool hermitian);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  bool hermitian() const { return hermitian_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::complex<double> operator()(std::size_t m, std::size_t n) const {
    return entries_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }

  /// max |a_mn - conj(a_nm)|
  double hermiticity_defect() const;

 private:
  Eigen::MatrixXcd entries_;
  bool hermitian_;
};

/// Symmetric Gamma-ratio coefficient of the phase-operator matrix elements.
double g_coefficient(std::size_t m, std::size_t n);

/// <h_m|phi|h_n> for m, n < dim: (1 - delta_mn) i^{n-m+1} g_mn / (m - n).
FockMatrix phi_matrix(std::size_t dim);

struct PhiSquaredDiagonal {
  double value = 0.0;             ///< partial_sum + tail_estimate
  double partial_sum = 0.0;       ///< head sum plus tail_terms explicit terms
  double tail_estimate = 0.0;     ///< asymptotic sum of the remainder
  double tail_uncertainty = 0.0;  ///< two- vs three-term tail fit difference
  std::size_t tail_terms = 0;
};

/// <h_m|phi^2|h_m> as sum_n |<h_m|phi|h_n>|^2. The slowly decaying upper tail
/// is summed from its asymptotic form n^{-p} (a + b/n + c/n^2), p = 3/2 for
/// even m and 5/2 for odd m, fitted to the last explicit terms. Throws
/// ConvergenceError when tail_uncertainty exceeds `tolerance`.
PhiSquaredDiagonal phi_squared_diagonal(std::size_t m, std::size_t tail_terms = kDefaultTailTerms,
                                        double tolerance = 1e-6);

struct SpectrumReport {
  std::size_t dim = 0;
  std::vector<double> eigenvalues;  // ascending
  double spread = 0.0;
};

/// Eigenvalues of phi_matrix(dim); dim must be at least 2.
SpectrumReport phi_spectrum(std::size_t dim);

struct RadialAverage {
  double value = 0.0;
  double last_term = 0.0;  ///< magnitude of the last retained series term
  bool converged = false;
};

/// Angle-averaged Weyl transform of phi^2 as a function of radius:
///   pi^2/3 + sum_{m<dim} (<h_m|phi^2|h_m> - pi^2/3) 2 (-1)^m e^{-R^2} L_m(2R^2),
/// with the partial sums Cesaro-averaged over the last kCesaroWindow terms.
/// Construction computes the dim diagonal elements once; evaluation is cheap.
class PhiSquaredRadialProfile {
 public:
  explicit PhiSquaredRadialProfile(std::size_t dim, double tolerance = 1e-3);

  RadialAverage operator()(double r) const;

  std::size_t dim() const { return diagonal_.size(); }
  /// <h_m|phi^2|h_m> for m < dim.
  const std::vector<double>& diagonal() const { return diagonal_; }

 private:
  std::vector<double> diagonal_;
  double tolerance_;
};

RadialAverage phi_squared_weyl_radial_average(double r, std::size_t dim = kDefaultFockDim);

}  // namespace wigosc
