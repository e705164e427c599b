#pragma once

#include <cmath>
#include <cstdint>

namespace critwin {

// Deterministic, toolchain-independent RNG primitives. <random> distributions
// are implementation-defined, which would break byte-identical reproducibility.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Xoshiro256 {
 public:
  // stream derived from (seed, stream index); distinct indices give
  // independent, order-free streams
  explicit Xoshiro256(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n) (Lemire rejection)
  std::uint64_t below(std::uint64_t n) {
    while (true) {
      std::uint64_t x = next();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (-n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

// Number of failures before the next success in Bernoulli(p) trials;
// floor(log(u)/log1p(-p)). Caller guarantees 0 < p < 1.
inline std::uint64_t geometric_skip(Xoshiro256& rng, double log1mp) {
  double u = rng.uniform();
  while (u <= 0) u = rng.uniform();
  double g = std::log(u) / log1mp;
  if (g >= 9.2e18) return 9200000000000000000ULL;
  return static_cast<std::uint64_t>(g);
}

}  // namespace critwin
