#include <doctest.h>

#include <cmath>
#include <vector>

#include "vardim/harness.hpp"
#include "vardim/path.hpp"
#include "vardim/rng.hpp"
#include "vardim/walker.hpp"

using namespace vardim;

namespace {

const LatticeGraph& k3_graph() {
  return cached_graph(LatticeParams{3, Rat(1), Rat(20), Rat(20)});
}

// Reference modulus by exhaustive enumeration of cut subsets (cuts at jump
// times, theta-separated, final block running to T): exponential, for short
// paths only.
double brute_force_w(const ClippedPath& p, const GraphRho& m, double theta) {
  const std::size_t n = p.t.size();
  double best = std::numeric_limits<double>::infinity();
  // Bitmask over interior cut candidates 1..n-1 (0 is always a cut).
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 1; i < n; ++i)
      if (mask & (1ULL << (i - 1))) cuts.push_back(i);
    bool ok = true;
    for (std::size_t c = 1; c < cuts.size(); ++c)
      if (p.t[cuts[c]] - p.t[cuts[c - 1]] < theta) ok = false;
    if (!ok) continue;
    double worst = 0.0;
    cuts.push_back(n);  // sentinel: last block runs to T
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
      for (std::size_t i = cuts[c]; i < cuts[c + 1]; ++i)
        for (std::size_t j = i + 1; j < cuts[c + 1]; ++j)
          worst = std::max(worst, m.rho2(p.v[i], p.v[j]));
    best = std::min(best, worst);
  }
  return std::sqrt(best);
}

}  // namespace

TEST_CASE("trivial moduli") {
  const LatticeGraph& g = k3_graph();
  const GraphRho m(g);
  Path p;
  p.k = 3;
  p.horizon = 1.0;
  p.t = {0.0};
  p.v = {g.rod_id(8)};
  CHECK(modulus_w_rho(p, m, 0.1, 1.0) == 0.0);  // constant path
  // One jump at t = 0.5 between rod neighbours: a cut at the jump time is
  // admissible whenever theta <= 0.5, so the modulus is 0.
  p.t = {0.0, 0.5};
  p.v = {g.rod_id(8), g.rod_id(9)};
  CHECK(modulus_w_rho(p, m, 0.3, 1.0) == 0.0);
  // theta > 0.5 forbids the cut: one block containing both states.
  CHECK(modulus_w_rho(p, m, 0.7, 1.0) == doctest::Approx(0.125));
  CHECK_THROWS(modulus_w_rho(p, m, 0.0, 1.0));
  CHECK_THROWS(modulus_w_rho(p, m, 2.0, 1.0));
}

TEST_CASE("modulus matches brute force on random short paths") {
  const LatticeGraph& g = k3_graph();
  const GraphRho m(g);
  const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
  int nontrivial = 0;
  for (std::uint64_t c = 0; c < 400; ++c) {
    RngStream rng(31337, c);
    // Random short walk (2^2k rate makes jumps dense; use a small horizon).
    const std::uint32_t starts[] = {kStarId, g.rod_id(4), g.plane_id(9, 1), g.plane_id(80, 0)};
    const std::uint32_t x0 = starts[c % 4];
    const double T = 0.02 + 0.15 * rng.uniform();
    Path p = simulate_reflected(kern, x0, T, rng);
    const ClippedPath cp = clip_path(p, T);
    if (cp.t.size() > 14 || cp.t.size() < 2) continue;
    const double theta = T * (0.05 + 0.4 * rng.uniform());
    const double got = modulus_w_rho(p, m, theta, T);
    const double want = brute_force_w(cp, m, theta);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
    if (want > 0) ++nontrivial;
  }
  CHECK(nontrivial > 30);
}

TEST_CASE("graph metric agrees with the continuum geodesic") {
  const LatticeGraph& g = k3_graph();
  const GraphRho m(g);
  const double eps = 1.0;
  const std::uint32_t ids[] = {kStarId, g.rod_id(8), g.rod_id(100), g.plane_id(9, 0),
                               g.plane_id(-16, 12), g.plane_id(80, 0)};
  for (std::uint32_t a : ids)
    for (std::uint32_t b : ids) {
      const double want = (a == b) ? 0.0 : geodesic_rho(g.point(a), g.point(b), eps);
      CHECK(std::sqrt(m.rho2(a, b)) == doctest::Approx(want).epsilon(1e-12));
      CHECK(m.rho(a, b) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("time reversal") {
  const LatticeGraph& g = k3_graph();
  const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
  RngStream rng(11, 0);
  const Path p = simulate_reflected(kern, g.plane_id(80, 0), 1.0, rng);
  REQUIRE(p.t.size() > 10);
  const Path r = time_reverse(p, 1.0);
  // r(s) = p((1-s)-): strictly between jump times the left limit is the value.
  for (double s : {0.01, 0.13, 0.49, 0.77, 0.93}) {
    // Pick s values away from jump times (probability-zero collisions aside).
    CHECK(r.state_at(s) == p.state_at(1.0 - s));
  }
  // Double reversal restores the original path.
  const Path rr = time_reverse(r, 1.0);
  for (double s = 0.0; s < 1.0; s += 0.015625) CHECK(rr.state_at(s) == p.state_at(s));
  // Reversal from an interior time uses only the pre-time history.
  const Path r2 = time_reverse(p, 0.5);
  CHECK(r2.state_at(0.2) == p.state_at(0.3));
  // Absorbed paths cannot be reversed past their absorption time.
  Path dead;
  dead.k = 3;
  dead.horizon = 1.0;
  dead.t = {0.0, 0.4};
  dead.v = {g.rod_id(8), g.rod_id(9)};
  dead.absorbed = true;
  dead.absorb_time = 0.6;
  CHECK_THROWS(time_reverse(dead, 0.8));
  CHECK_NOTHROW(time_reverse(dead, 0.5));
}

TEST_CASE("clip path drops events beyond the window") {
  Path p;
  p.k = 3;
  p.horizon = 2.0;
  p.t = {0.0, 0.3, 0.9, 1.4};
  p.v = {1, 2, 3, 4};
  const ClippedPath cp = clip_path(p, 1.0);
  CHECK(cp.T == 1.0);
  CHECK(cp.t == std::vector<double>{0.0, 0.3, 0.9});
  CHECK(cp.v == std::vector<std::uint32_t>{1, 2, 3});
}
