#pragma once

#include <cstdint>
#include <random>

namespace escape {

/// Seeded generator with distributions defined here rather than by the
/// standard library, whose distribution algorithms vary between
/// implementations. Same seed gives the same stream on every platform.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi)
  {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool bernoulli(double p) { return uniform01() < p; }

private:
  std::mt19937_64 engine_;
};

}  // namespace escape
