#pragma once

#include <cstdint>

namespace suplogic {

/// splitmix64; small, fast, and identical on every platform, so seeded
/// searches and fuzz reports are reproducible everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  /// True with probability p.
  bool coin(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

private:
  std::uint64_t state_;
};

}  // namespace suplogic
