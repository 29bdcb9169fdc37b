#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace tspd {

// mt19937_64 with hand-rolled conversions: the standard fixes the engine's
// output sequence but not the distributions, so these keep results identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of an independent stream, e.g. one per GRASP iteration.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace tspd
