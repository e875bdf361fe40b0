#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "vardim/kernel.hpp"
#include "vardim/path.hpp"
#include "vardim/rng.hpp"

namespace vardim {

inline constexpr std::uint32_t kCemetery = 0xfffffffeu;

// Streaming simulation core. Visitor signature: on_jump(t_new, vertex_new);
// called once per executed jump (not for the initial state).
//
// Holding times are exponential at the constant rate lambda = 2^2k via
// inverse-CDF sampling; the embedded chain follows the kernel road map.

// Reflected walk on the domain graph: conservative, never leaves the domain.
template <class OnJump>
void run_reflected(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng,
                   OnJump&& on_jump) {
  double t = 0.0;
  std::uint32_t x = start;
  while (true) {
    t += rng.exponential(kernel.lambda);
    if (t > t_max) return;
    x = kernel.sample_next(x, rng);
    on_jump(t, x);
  }
}

// Killed walk: follows the full road map and is absorbed at the first arrival
// at a boundary vertex. Returns the absorption time, or a negative value if
// the walk survived to t_max. A start on the boundary is absorbed at time 0.
template <class OnJump>
double run_killed(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng,
                  OnJump&& on_jump) {
  const LatticeGraph& g = *kernel.g;
  if (g.flags_of(start) & kFlagBoundary) return 0.0;
  double t = 0.0;
  std::uint32_t x = start;
  while (true) {
    t += rng.exponential(kernel.lambda);
    if (t > t_max) return -1.0;
    x = kernel.sample_next(x, rng);
    on_jump(t, x);
    if (g.flags_of(x) & kFlagBoundary) return t;
  }
}

// Ikeda-Nagasawa-Watanabe resurrection: killed runs glued at absorption
// times, restarting from the pre-absorption (left limit) vertex with the same
// stream of randomness. The resurrected walk never occupies boundary
// vertices.
template <class OnJump>
void run_resurrected(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng,
                     OnJump&& on_jump) {
  const LatticeGraph& g = *kernel.g;
  double t = 0.0;
  std::uint32_t x = start;
  while (true) {
    t += rng.exponential(kernel.lambda);
    if (t > t_max) return;
    const std::uint32_t y = kernel.sample_next(x, rng);
    if (g.flags_of(y) & kFlagBoundary) {
      on_jump(t, x);  // resurrection event: the jump into the boundary is replaced by the left limit
    } else {
      x = y;
      on_jump(t, x);
    }
  }
}

enum class WalkMode { Reflected, Killed, Resurrected };

// Path-recording wrappers.
Path simulate_reflected(const JumpKernel& kernel, std::uint32_t start, double t_max,
                        RngStream& rng);
Path simulate_killed(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng);
Path resurrect_inw(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng);

// Deterministic parallel fan-out over path indices: fn(path_index, rng) runs
// with the stream derived from (master_seed, path_index), so results are
// independent of the worker count. fn must only write to per-path slots or
// commutative integer accumulators.
template <class Fn>
void parallel_paths(std::uint64_t n, int threads, std::uint64_t master_seed, Fn&& fn) {
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) {
      RngStream rng(master_seed, i);
      fn(i, rng);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 64;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::uint64_t base = next.fetch_add(kChunk);
        if (base >= n) return;
        const std::uint64_t end = std::min(n, base + kChunk);
        for (std::uint64_t i = base; i < end; ++i) {
          RngStream rng(master_seed, i);
          fn(i, rng);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Discrete start distribution given by per-vertex weights (need not be
// normalized); sampling by inverse CDF over the cumulative sums.
class StartDistribution {
 public:
  explicit StartDistribution(const std::vector<double>& weights);
  std::uint32_t sample(RngStream& rng) const;

 private:
  std::vector<double> cum_;
};

// Time-in-vertex occupation fractions and fixed-time marginals for a path
// set; `times` must be sorted. Marginal state kCemetery is used after
// absorption.
struct OccupationStats {
  std::vector<double> occupation;               // per-vertex fraction of total time
  std::vector<std::vector<std::uint32_t>> marginals;  // [time index][path index]
};
OccupationStats occupation_and_marginals(const std::vector<Path>& paths,
                                         const std::vector<double>& times,
                                         std::uint32_t vertex_count);

}  // namespace vardim
