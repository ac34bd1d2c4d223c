#pragma once

// Counter-based random numbers. Every trajectory owns an independent
// substream addressed by (seed, trajectory index, block), so results do not
// depend on how trajectories are split across workers.

#include <array>
#include <cstdint>

namespace wigosc {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds.
PhiloxCounter philox4x32(PhiloxCounter ctr, PhiloxKey key);

/// Uniform in (0, 1) from the top 52 bits of two words; never 0 or 1.
double uniform_open(std::uint32_t hi, std::uint32_t lo);

/// Standard normals for one trajectory, two per Philox block via Box-Muller.
/// Block b of trajectory i uses counter (i_lo, i_hi, b_lo, b_hi) and key = seed.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t trajectory);

  double next();

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t trajectory_;
  std::uint64_t block_ = 0;
  double cache_[2] = {0.0, 0.0};
  int avail_ = 0;
};

}  // namespace wigosc
