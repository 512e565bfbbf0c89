#pragma once

// Seeded random numbers for the randomized suites. Every check draws from
// its own stream derived from (seed, check id), so results do not depend on
// scheduling.

#include <cstdint>
#include <random>
#include <string_view>

#include "dsf/core.hpp"

namespace dsf {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  Rng(std::uint64_t seed, std::string_view id) : eng_(substream_seed(seed, id)) {}

  /// [0, 1) with 53 random bits; std distributions are not portable.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Uniform in the disk |z| <= r_max.
  cplx disk(double r_max) {
    const double r = r_max * std::sqrt(uniform());
    return std::polar(r, 2.0 * pi * uniform());
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dsf
