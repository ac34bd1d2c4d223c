#include "wigosc/special.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wigosc;

// Explicit power series in long double.
static long double laguerre_series(unsigned n, unsigned k, long double x) {
  long double sum = 0.0L;
  for (unsigned j = 0; j <= n; ++j) {
    const long double binom = std::exp(std::lgamma((long double)(n + k + 1)) -
                                       std::lgamma((long double)(n - j + 1)) - std::lgamma((long double)(k + j + 1)));
    const long double term = binom * std::pow(x, (long double)j) / std::tgamma((long double)(j + 1));
    sum += (j % 2 ? -term : term);
  }
  return sum;
}

TEST(Laguerre, MatchesSeries) {
  for (unsigned n : {0u, 1u, 2u, 5u, 10u}) {
    for (unsigned k : {0u, 1u, 3u}) {
      for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        const double ref = static_cast<double>(laguerre_series(n, k, x));
        EXPECT_NEAR(laguerre(n, k, x), ref, 1e-10 * std::max(1.0, std::abs(ref))) << n << " " << k << " " << x;
      }
    }
  }
}

TEST(Laguerre, MatchesStdAssocLaguerre) {
  for (unsigned n = 0; n < 60; n += 7) {
    for (double x : {0.1, 4.0, 30.0}) {
      const double ref = std::assoc_laguerre(n, 2, x);
      EXPECT_NEAR(laguerre(n, 2, x), ref, 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
  const auto seq = laguerre_sequence(12, 1, 3.3);
  for (unsigned n = 0; n < 12; ++n) EXPECT_NEAR(seq[n], std::assoc_laguerre(n, 1, 3.3), 1e-10);
}

TEST(Laguerre, ScaledFunctionsAgreeAndStayFinite) {
  const auto seq = laguerre_function_sequence(40, 5.0);
  for (unsigned n = 0; n < 40; ++n) {
    EXPECT_NEAR(seq[n], std::exp(-2.5) * std::laguerre(n, 5.0), 1e-11);
  }
  // L_n(2000) overflows double for large n; the scaled form must not.
  const auto big = laguerre_function_sequence(600, 2000.0);
  for (double v : big) EXPECT_TRUE(std::isfinite(v));
  // Orthonormality-bounded: |e^{-x/2} L_n(x)| <= 1.
  for (double x : {0.5, 40.0, 900.0}) {
    for (double v : laguerre_function_sequence(300, x)) EXPECT_LE(std::abs(v), 1.0 + 1e-9);
  }
}

TEST(LogFactorial, SmallAndLarge) {
  double direct = 0.0;
  for (unsigned n = 1; n <= 170; ++n) {
    direct += std::log(static_cast<double>(n));
    EXPECT_NEAR(log_factorial(n), direct, 1e-10 * direct);
  }
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(M_PI), 1e-14);
  EXPECT_NEAR(log_gamma(100.25), std::lgamma(100.25), 1e-12);
}
