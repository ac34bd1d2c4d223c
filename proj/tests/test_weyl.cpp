#include "wigosc/weyl.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace wigosc;

namespace {

// Normalized Hermite functions psi_n(x) for n < count (hbar = m = omega = 1).
std::vector<double> hermite_functions(std::size_t count, double x) {
  std::vector<double> psi(count);
  psi[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (count > 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (std::size_t n = 2; n < count; ++n) {
    psi[n] = std::sqrt(2.0 / n) * x * psi[n - 1] - std::sqrt((n - 1.0) / n) * psi[n - 2];
  }
  return psi;
}

// <h_m| Delta |h_n> = 2 int dy psi_m(q + y) psi_n(q - y) e^{2 i p y}, by a
// fine trapezoid sum; natural units so p = x and q = y of the phase point.
std::complex<double> brute_delta(std::size_t m, std::size_t n, PolarPoint pt) {
  const double p = pt.r * std::cos(pt.phi);
  const double q = pt.r * std::sin(pt.phi);
  const std::size_t count = std::max(m, n) + 1;
  const double lo = -14.0;
  const double hi = 14.0;
  const int steps = 20000;
  const double h = (hi - lo) / steps;
  std::complex<double> sum = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double y = lo + k * h;
    const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
    const double a = hermite_functions(count, q + y)[m];
    const double b = hermite_functions(count, q - y)[n];
    sum += w * a * b * std::polar(1.0, 2.0 * p * y);
  }
  return 2.0 * h * sum;
}

}  // namespace

TEST(DeltaMatrixElement, MatchesBruteForceOverlap) {
  const std::vector<PolarPoint> pts = {{1.0, 0.0}, {0.7, 1.1}, {1.6, -2.4}, {0.0, 0.0}, {2.3, 3.0}};
  for (const auto& pt : pts) {
    for (std::size_t m = 0; m < 5; ++m) {
      for (std::size_t n = 0; n < 5; ++n) {
        const auto ref = brute_delta(m, n, pt);
        const auto got = delta_matrix_element(m, n, pt);
        EXPECT_NEAR(got.real(), ref.real(), 1e-9) << m << n << " r=" << pt.r << " phi=" << pt.phi;
        EXPECT_NEAR(got.imag(), ref.imag(), 1e-9) << m << n << " r=" << pt.r << " phi=" << pt.phi;
      }
    }
  }
}

TEST(DeltaMatrixElement, KnownValueAndHermiticity) {
  const auto v = delta_matrix_element(1, 0, {1.0, 0.0});
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), 2.0 * std::sqrt(2.0) / std::exp(1.0), 1e-14);
  const PolarPoint pt{1.3, 0.4};
  for (std::size_t m = 0; m < 8; ++m) {
    for (std::size_t n = 0; n < 8; ++n) {
      const auto a = delta_matrix_element(m, n, pt);
      const auto b = std::conj(delta_matrix_element(n, m, pt));
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13);
    }
  }
}

TEST(DeltaMatrixElement, LargeIndicesStayFinite) {
  const auto v = delta_matrix_element(400, 380, {20.0, 0.3});
  EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
  EXPECT_LE(std::abs(v), 2.0 + 1e-9);
}

TEST(FockProjector, DiagonalOfDelta) {
  for (std::size_t n = 0; n < 10; ++n) {
    for (double r : {0.0, 0.5, 1.7, 3.0}) {
      const double ref = 2.0 * (n % 2 ? -1.0 : 1.0) * std::exp(-r * r) * std::laguerre(n, 2.0 * r * r);
      EXPECT_NEAR(fock_projector_transform(n, r), ref, 1e-12);
      EXPECT_NEAR(delta_matrix_element(n, n, {r, 0.9}).real(), ref, 1e-12);
    }
  }
}

TEST(ThermalTransform, EqualsBoltzmannSumOfProjectors) {
  const auto spec = OscillatorSpec::natural();
  for (double beta : {0.3, 1.0, 2.5}) {
    for (double r : {0.0, 0.8, 2.0}) {
      double sum = 0.0;
      for (unsigned n = 0; n < 400; ++n) {
        sum += std::exp(-beta * (n + 0.5)) * 2.0 * (n % 2 ? -1.0 : 1.0) * std::exp(-r * r) *
               std::laguerre(n, 2.0 * r * r);
      }
      EXPECT_NEAR(thermal_weyl_transform(beta, spec, r), sum, 1e-10) << beta << " " << r;
    }
  }
  // beta = 0: identity, whose Weyl symbol is 1.
  EXPECT_DOUBLE_EQ(thermal_weyl_transform(0.0, spec, 1.3), 1.0);
}

TEST(GaussianIntegral, MatchesGridSum) {
  Eigen::Matrix2d a;
  a << 2.0, 0.6, 0.6, 1.1;
  const Eigen::Vector2d j(0.4, -0.9);
  const double h = 0.02;
  double sum = 0.0;
  for (double x = -12.0; x <= 12.0; x += h) {
    for (double y = -12.0; y <= 12.0; y += h) {
      const Eigen::Vector2d v(x, y);
      sum += std::exp(-0.5 * v.dot(a * v)) * std::cos(j.dot(v));
    }
  }
  EXPECT_NEAR(gaussian_quadratic_integral(a, j), sum * h * h, 1e-8);
}

TEST(GaussianIntegral, RejectsIndefinite) {
  Eigen::Matrix2d bad;
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(gaussian_quadratic_integral(bad, Eigen::Vector2d::Zero()), std::domain_error);
  Eigen::Matrix2d asym;
  asym << 1.0, 0.1, 0.0, 1.0;
  EXPECT_THROW(gaussian_quadratic_integral(asym, Eigen::Vector2d::Zero()), std::domain_error);
}
