#include "wigosc/quadrature.hpp"
#include "wigosc/types.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wigosc;

TEST(Integrate, Polynomial) {
  const auto r = integrate([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, 15.0 / 4.0 - 3.0, 1e-13);
}

TEST(Integrate, ReversedBoundsFlipSign) {
  const auto r = integrate([](double x) { return std::exp(x); }, 1.0, 0.0);
  EXPECT_NEAR(r.value, -(std::exp(1.0) - 1.0), 1e-13);
}

TEST(Integrate, InfiniteRanges) {
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -kInfinity, kInfinity).value, std::sqrt(kPi),
              1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x); }, 0.0, kInfinity).value, 1.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -kInfinity, 0.0).value, 0.5 * kPi, 1e-10);
}

TEST(Integrate, SharpPeak) {
  const double w = 1e-4;
  auto f = [w](double x) { return w / (x * x + w * w); };
  EXPECT_NEAR(integrate(f, -1.0, 1.0).value, 2.0 * std::atan(1.0 / w), 1e-9);
}

TEST(Integrate, SmallValuesUseRelativeTolerance) {
  auto f = [](double x) { return 1e-30 * std::cos(x); };
  QuadratureOptions o;
  o.abs_tol = 0.0;
  const auto r = integrate(f, 0.0, 1.0, o);
  EXPECT_NEAR(r.value / 1e-30, std::sin(1.0), 1e-12);
}

TEST(Integrate, ThrowsWhenItCannotConverge) {
  QuadratureOptions o;
  o.max_intervals = 50;
  EXPECT_THROW(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, o), ConvergenceError);
  EXPECT_THROW(integrate([](double) { return NAN; }, 0.0, 1.0), ConvergenceError);
}

TEST(Integrate2d, GaussianOnDisk) {
  // int_{x^2+y^2<1} e^{-(x^2+y^2)} = pi (1 - e^{-1})
  auto f = [](double x, double y) { return std::exp(-(x * x + y * y)); };
  const auto r = integrate_2d(
      f, -1.0, 1.0, [](double x) { return -std::sqrt(1.0 - x * x); },
      [](double x) { return std::sqrt(1.0 - x * x); });
  EXPECT_NEAR(r.value, kPi * (1.0 - std::exp(-1.0)), 1e-9);
}

TEST(Integrate2d, Rectangle) {
  const auto r = integrate_2d([](double x, double y) { return x * std::sin(y); }, 0.0, 2.0, 0.0, kPi);
  EXPECT_NEAR(r.value, 4.0, 1e-11);
}
