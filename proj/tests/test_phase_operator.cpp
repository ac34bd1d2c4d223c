#include "wigosc/phase_operator.hpp"
#include "wigosc/quadrature.hpp"
#include "wigosc/types.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace wigosc;

namespace {

// g_{mn} straight from the Gamma-function ratio, m <= n.
double g_oracle(unsigned m, unsigned n) {
  if (m > n) std::swap(m, n);
  const double s = (m % 2 == 0) ? 0.5 : 1.0;
  return std::exp(-0.5 * (n - m) * std::log(2.0) + std::lgamma(0.5 * m + s) - std::lgamma(0.5 * n + s) +
                  0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)));
}

// sum_{n != m} |phi_mn|^2 by brute force up to k terms above m.
double brute_phi_sq(unsigned m, unsigned k) {
  double s = 0.0;
  for (unsigned n = 0; n < m; ++n) s += std::pow(g_oracle(m, n) / (double(m) - n), 2);
  for (unsigned n = m + 1; n <= m + k; ++n) s += std::pow(g_oracle(m, n) / (double(n) - m), 2);
  return s;
}

}  // namespace

TEST(GCoefficient, MatchesGammaRatioAndIsSymmetric) {
  for (unsigned m = 0; m < 30; ++m) {
    for (unsigned n = 0; n < 30; ++n) {
      EXPECT_EQ(g_coefficient(m, n), g_coefficient(n, m));
      if (m != n) EXPECT_NEAR(g_coefficient(m, n), g_oracle(m, n), 1e-12 * g_oracle(m, n));
    }
  }
  EXPECT_NEAR(g_coefficient(0, 1), std::sqrt(kPi / 2.0), 1e-14);
  // Correspondence limit.
  EXPECT_NEAR(g_coefficient(200, 201), 1.0, 2e-3);
  EXPECT_NEAR(g_coefficient(5000, 5003), 1.0, 1e-3);
}

TEST(PhiMatrix, HermitianZeroDiagonal) {
  const FockMatrix phi = phi_matrix(64);
  EXPECT_TRUE(phi.hermitian());
  EXPECT_LE(phi.hermiticity_defect(), 1e-12);
  for (std::size_t m = 0; m < 64; ++m) EXPECT_EQ(phi(m, m), std::complex<double>(0.0, 0.0));
  // <h_0|phi|h_1> = i^2 g_01 / (0 - 1) = g_01
  EXPECT_NEAR(phi(0, 1).real(), std::sqrt(kPi / 2.0), 1e-14);
  EXPECT_NEAR(phi(0, 1).imag(), 0.0, 1e-15);
  EXPECT_THROW(phi_matrix(0), std::invalid_argument);
}

TEST(FockMatrix, RejectsFalseHermitianFlag) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = {1.0, 0.0};
  EXPECT_THROW(FockMatrix(m, true), std::invalid_argument);
  EXPECT_NO_THROW(FockMatrix(m, false));
}

TEST(PhiSquaredDiagonal, AgreesWithExtrapolatedBruteForce) {
  // Even m: the tail behaves like A / sqrt(K); Richardson-eliminate it from
  // sums at K and 4K.
  for (unsigned m : {0u, 2u, 10u}) {
    const double s1 = brute_phi_sq(m, 200000);
    const double s4 = brute_phi_sq(m, 800000);
    const double ref = 2.0 * s4 - s1;
    EXPECT_NEAR(phi_squared_diagonal(m).value, ref, 2e-6) << "m=" << m;
  }
  // Odd m: the tail dies fast, brute force converges directly.
  for (unsigned m : {1u, 3u, 11u}) {
    EXPECT_NEAR(phi_squared_diagonal(m).value, brute_phi_sq(m, 400000), 1e-6) << "m=" << m;
  }
}

TEST(PhiSquaredDiagonal, ApproachesUniformValue) {
  const double target = kPi * kPi / 3.0;
  EXPECT_GT(std::abs(phi_squared_diagonal(0).value - target), 0.3);
  EXPECT_LT(std::abs(phi_squared_diagonal(200).value - target), 0.02);
}

TEST(PhiSquaredDiagonal, ReportsUnresolvedTail) {
  EXPECT_THROW(phi_squared_diagonal(0, 40, 1e-9), ConvergenceError);
  const auto d = phi_squared_diagonal(0);
  EXPECT_LE(d.tail_uncertainty, 1e-6);
  EXPECT_NEAR(d.value, d.partial_sum + d.tail_estimate, 1e-15);
}

TEST(PhiSpectrum, MatchesRealEmbedding) {
  // [[Re, -Im], [Im, Re]] is real symmetric with every eigenvalue doubled.
  const std::size_t dim = 40;
  const auto e = phi_matrix(dim).entries();
  Eigen::MatrixXd big(2 * dim, 2 * dim);
  big << e.real(), -e.imag(), e.imag(), e.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(big, Eigen::EigenvaluesOnly);
  const auto report = phi_spectrum(dim);
  ASSERT_EQ(report.eigenvalues.size(), dim);
  for (std::size_t i = 0; i < dim; ++i) {
    EXPECT_NEAR(report.eigenvalues[i], solver.eigenvalues()(2 * i), 1e-10);
    EXPECT_NEAR(report.eigenvalues[i], solver.eigenvalues()(2 * i + 1), 1e-10);
  }
}

TEST(PhiSpectrum, SpreadGrowsTowardTwoPi) {
  double previous = 0.0;
  for (std::size_t dim : {2u, 25u, 50u, 100u, 200u}) {
    const auto r = phi_spectrum(dim);
    EXPECT_GT(r.spread, previous);
    EXPECT_LT(r.spread, kTwoPi);
    EXPECT_GE(r.eigenvalues.front(), -kPi);
    EXPECT_LE(r.eigenvalues.back(), kPi);
    // Spectrum symmetric about zero.
    EXPECT_NEAR(r.eigenvalues.front(), -r.eigenvalues.back(), 1e-10);
    previous = r.spread;
  }
  // dim 2: eigenvalues +-g_01.
  EXPECT_NEAR(phi_spectrum(2).spread, 2.0 * std::sqrt(kPi / 2.0), 1e-12);
  EXPECT_THROW(phi_spectrum(1), std::invalid_argument);
}

TEST(RadialAverage, UniformAtLargeRadius) {
  const auto a = phi_squared_weyl_radial_average(8.0, 128);
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.value, kPi * kPi / 3.0, 1e-3);
}

TEST(RadialAverage, OriginIsFlaggedUnresolved) {
  // At R = 0 the series terms decay only like 1/sqrt(m).
  const auto a = phi_squared_weyl_radial_average(0.0, 128);
  EXPECT_FALSE(a.converged);
  EXPECT_GT(a.last_term, 1e-3);
}

TEST(RadialAverage, TraceAgainstGroundProjector) {
  // Tr(rho phi^2) = int R dR f_0(R) A(R) with f_0 = 2 e^{-R^2}; Laguerre
  // orthogonality leaves exactly <h_0|phi^2|h_0>.
  const PhiSquaredRadialProfile profile(64);
  QuadratureOptions o;
  o.rel_tol = 1e-11;
  const double tr =
      integrate([&](double r) { return r * 2.0 * std::exp(-r * r) * profile(r).value; }, 0.0, 12.0, o).value;
  EXPECT_NEAR(tr, profile.diagonal()[0], 1e-8);
  EXPECT_NEAR(profile.diagonal()[0], phi_squared_diagonal(0).value, 1e-15);
}
