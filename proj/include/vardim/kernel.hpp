#pragma once

#include <cstdint>
#include <iosfwd>

#include "vardim/measures.hpp"
#include "vardim/rng.hpp"

namespace vardim {

// Full: one-step distribution of the free walk (uniform over v_full
// neighbours; rows at vertices with missing neighbours carry an explicit exit
// deficit). Reflected: renormalized to the domain graph (uniform over v_dom).
enum class KernelVariant { Full, Reflected };

// One-step jump distribution ("road map") with constant speed lambda = 2^2k.
// At the Star vertex the rod neighbour has probability 2^(k+1)/(v + 2^(k+1) - 1)
// and each plane neighbour 1/(v + 2^(k+1) - 1).
struct JumpKernel {
  KernelVariant variant = KernelVariant::Reflected;
  const LatticeGraph* g = nullptr;
  double lambda = 0.0;
  Frac star_rod, star_plane;  // exact Star-row probabilities
  double star_rod_d = 0.0;

  int degree(std::uint32_t x) const {
    return variant == KernelVariant::Full ? g->vfull_of(x) : g->vdom_of(x);
  }

  // Exact probability of the oriented jump x -> y; zero if not adjacent in
  // the domain graph (full-variant mass to non-materialized vertices is
  // reported via exit_deficit).
  Frac prob(std::uint32_t x, std::uint32_t y) const;

  // Full variant: (v_full - v_dom)/v_full at x; zero otherwise.
  Frac exit_deficit(std::uint32_t x) const;

  // Samples the next vertex among domain-graph neighbours. Requires a
  // complete row (reflected variant anywhere; full variant where the row has
  // no exit deficit — the killed walk never jumps from an absorbing vertex).
  std::uint32_t sample_next(std::uint32_t x, RngStream& rng) const;
};

JumpKernel make_kernel(const LatticeGraph& g, KernelVariant variant);

struct BalanceReport {
  bool exact_ok = false;          // j(x,y) m0(x) == j(y,x) m0(y) on every oriented edge
  bool constants_ok = false;      // edge constants match 1/4 (plane) and 2^(k-1) (rod)
  double max_rel_violation = 0.0; // float cross-check
  Frac plane_const, rod_const;
  long long edges_checked = 0;
};

// Exhaustive oriented-edge scan of the detailed-balance identity for the
// kernel variant against its matching speed-scaled measure (m0 for Full,
// mbar0 for Reflected).
BalanceReport detailed_balance_violation(const LatticeGraph& g, const JumpKernel& kernel,
                                         const MeasureTable& t);

// CSV audit dump of kernel rows: "from,to,prob" (to = -1 for the exit
// deficit), ascending ids.
void write_kernel_csv(const JumpKernel& kernel, std::ostream& os);

}  // namespace vardim
