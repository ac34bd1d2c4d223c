#include "wigosc/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace wigosc;

// Published Philox4x32-10 known-answer vectors.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Uniform, OpenInterval) {
  EXPECT_GT(uniform_open(0, 0), 0.0);
  EXPECT_LT(uniform_open(0xffffffffu, 0xffffffffu), 1.0);
  EXPECT_NEAR(uniform_open(0x80000000u, 0), 0.5, 1e-15);
}

TEST(NormalStream, ReproducibleAndIndependentOfOrder) {
  NormalStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::vector<double> va, vb;
  for (int i = 0; i < 11; ++i) {
    va.push_back(a.next());
    vb.push_back(b.next());
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va[0], c.next());
  EXPECT_NE(va[0], d.next());
}

TEST(NormalStream, Moments) {
  double s1 = 0, s2 = 0, s4 = 0;
  const int n = 400000;
  for (int t = 0; t < n / 100; ++t) {
    NormalStream s(1, t);
    for (int k = 0; k < 100; ++k) {
      const double g = s.next();
      s1 += g;
      s2 += g * g;
      s4 += g * g * g * g;
    }
  }
  // 5-sigma bands.
  EXPECT_NEAR(s1 / n, 0.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 5.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(s4 / n, 3.0, 5.0 * std::sqrt(96.0 / n));
}
