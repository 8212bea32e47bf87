#pragma once

#include "quiverdyn/rational.hpp"

#include <cstdint>
#include <vector>

namespace quiverdyn {

/// splitmix64. Hand-rolled so that seeded runs are bit-identical across
/// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi]. Modulo bias is irrelevant at the ranges used here.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Positive rational with numerator and denominator in [1, max_val].
inline Rat random_positive_rational(SplitMix64& rng, long max_val = 10) {
  long n = rng.range(1, max_val);
  long d = rng.range(1, max_val);
  return Rat(n, d);
}

inline std::vector<Rat> random_positive_point(SplitMix64& rng, std::size_t n, long max_val = 10) {
  std::vector<Rat> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_positive_rational(rng, max_val));
  return p;
}

}  // namespace quiverdyn
