#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace vardim {

// Counter-based stream RNG: xoshiro256++ seeded through splitmix64 from
// (master seed, stream index). Distinct stream indices give independent,
// reproducible streams, so per-path results never depend on scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t x = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1));
    x ^= stream_index << 32 | stream_index >> 32;
    for (auto& si : s_) si = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Inverse-CDF exponential variate with the given rate (strictly positive).
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  // Uniform integer in [0, n) by Lemire's multiply-shift rejection.
  std::uint32_t bounded(std::uint32_t n) {
    std::uint64_t m = (next() >> 32) * static_cast<std::uint64_t>(n);
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      const std::uint32_t threshold = (0u - n) % n;
      while (lo < threshold) {
        m = (next() >> 32) * static_cast<std::uint64_t>(n);
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

}  // namespace vardim
