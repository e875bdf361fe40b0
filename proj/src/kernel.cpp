#include "vardim/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vardim {

JumpKernel make_kernel(const LatticeGraph& g, KernelVariant variant) {
  JumpKernel k;
  k.variant = variant;
  k.g = &g;
  const long long S = g.params.scale();
  k.lambda = static_cast<double>(S) * static_cast<double>(S);
  const long long den = g.star_v() + 2 * S - 1;
  k.star_rod = {2 * S, den};
  k.star_plane = {1, den};
  k.star_rod_d = k.star_rod.value();
  return k;
}

Frac JumpKernel::prob(std::uint32_t x, std::uint32_t y) const {
  if (x == kStarId) {
    if (y == g->rod1_id()) return star_rod;
    if (std::binary_search(g->star_plane.begin(), g->star_plane.end(), y)) return star_plane;
    return {0, 1};
  }
  for (std::uint32_t nb : g->adj[x - 1])
    if (nb == y) return {1, degree(x)};
  return {0, 1};
}

Frac JumpKernel::exit_deficit(std::uint32_t x) const {
  if (variant != KernelVariant::Full || x == kStarId) return {0, 1};
  const long long vf = g->vfull_of(x), vd = g->vdom_of(x);
  return {vf - vd, vf};
}

std::uint32_t JumpKernel::sample_next(std::uint32_t x, RngStream& rng) const {
  if (x == kStarId) {
    if (rng.uniform() < star_rod_d) return g->rod1_id();
    return g->star_plane[rng.bounded(static_cast<std::uint32_t>(g->star_plane.size()))];
  }
  const int vd = g->vdom_of(x);
  assert(variant == KernelVariant::Reflected || vd == g->vfull_of(x));
  return g->adj[x - 1][rng.bounded(static_cast<std::uint32_t>(vd))];
}

BalanceReport detailed_balance_violation(const LatticeGraph& g, const JumpKernel& kernel,
                                         const MeasureTable& t) {
  const bool full = kernel.variant == KernelVariant::Full;
  const std::vector<long long>& num = full ? t.num_m : t.num_mbar;
  const long long S = g.params.scale();
  const long long star_den = g.star_v() + 2 * S - 1;
  BalanceReport rep;
  rep.plane_const = {1, 4};
  rep.rod_const = {S, 2};  // 2^(k-1)
  rep.exact_ok = true;
  rep.constants_ok = true;

  // j(x,y) m0(x) with m0 numerator num[x]/4; for non-star x, j = 1/v(x).
  auto flux = [&](std::uint32_t x, std::uint32_t y) -> Frac {
    if (x == kStarId) {
      const long long jn = (y == g.rod1_id()) ? 2 * S : 1;
      return {jn * num[kStarId], 4 * star_den};
    }
    const long long v = full ? g.vfull_of(x) : g.vdom_of(x);
    (void)y;
    return {num[x], 4 * v};
  };

  auto check_edge = [&](std::uint32_t x, std::uint32_t y) {
    const Frac fx = flux(x, y), fy = flux(y, x);
    if (!frac_eq(fx, fy)) rep.exact_ok = false;
    const bool rod_edge = (g.is_rod(x) || g.is_rod(y)) &&
                          (!g.is_plane(x) && !g.is_plane(y));
    const Frac& c = rod_edge ? rep.rod_const : rep.plane_const;
    if (!frac_eq(fx, c) || !frac_eq(fy, c)) rep.constants_ok = false;
    const double a = fx.value(), b = fy.value();
    const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    rep.max_rel_violation = std::max(rep.max_rel_violation, rel);
    ++rep.edges_checked;
  };

  for (std::uint32_t y : g.star_plane) check_edge(kStarId, y);
  check_edge(kStarId, g.rod1_id());
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x)
    for (std::uint32_t y : g.adj[x - 1])
      if (y != kNoVertex && y > x) check_edge(x, y);
  return rep;
}

void write_kernel_csv(const JumpKernel& kernel, std::ostream& os) {
  const LatticeGraph& g = *kernel.g;
  os << "from,to,prob\n";
  for (std::uint32_t y : g.star_plane)
    os << "0," << y << ',' << kernel.star_plane.num << '/' << kernel.star_plane.den << '\n';
  os << "0," << g.rod1_id() << ',' << kernel.star_rod.num << '/' << kernel.star_rod.den << '\n';
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    const int v = kernel.degree(x);
    std::array<std::uint32_t, 4> nb = g.adj[x - 1];
    std::sort(nb.begin(), nb.end());
    for (std::uint32_t y : nb)
      if (y != kNoVertex) os << x << ',' << y << ",1/" << v << '\n';
    const Frac deficit = kernel.exit_deficit(x);
    if (deficit.num != 0)
      os << x << ",-1," << deficit.num << '/' << deficit.den << '\n';
  }
}

}  // namespace vardim
