#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ersim {

// Named random streams. Each (seed, stream) pair yields an independent,
// platform-stable sequence so that adding draws to one subsystem never
// perturbs another.
enum class Stream : std::uint32_t {
  kPlacement = 1,
  kMobility = 2,
  kTraffic = 3,
  kNode = 1000,  // + node id
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint32_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      stream};
    engine_.seed(seq);
  }
  Rng(std::uint64_t seed, Stream stream, std::uint32_t offset = 0)
      : Rng(seed, static_cast<std::uint32_t>(stream) + offset) {}

  // Uniform in [0, 1) with 53 random bits. Avoids the implementation-defined
  // std::uniform_real_distribution so sequences match across standard libraries.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * n) % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ersim
