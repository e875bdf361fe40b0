#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "vardim/harness.hpp"
#include "vardim/stats.hpp"
#include "vardim/walker.hpp"

using namespace vardim;

namespace {
const LatticeGraph& k3_graph() {
  return cached_graph(LatticeParams{3, Rat(1), Rat(20), Rat(20)});
}
}  // namespace

TEST_CASE("rng: bounded sampling is uniform and exponential has the right mean") {
  RngStream rng(20250825, 7);
  std::array<long long, 5> counts{};
  const int n = 200000;
  for (int i = 0; i < n; ++i) counts[rng.bounded(5)]++;
  for (long long c : counts) CHECK(std::abs(c - n / 5.0) < 5.0 * std::sqrt(n * 0.2 * 0.8));
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += rng.exponential(64.0);
  CHECK(acc / n == doctest::Approx(1.0 / 64.0).epsilon(0.02));
  // Streams are reproducible.
  RngStream a(1, 42), b(1, 42), c(1, 43);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
}

TEST_CASE("zero horizon and boundary-start semantics") {
  const LatticeGraph& g = k3_graph();
  const JumpKernel refl = make_kernel(g, KernelVariant::Reflected);
  const JumpKernel full = make_kernel(g, KernelVariant::Full);
  RngStream rng(1, 0);
  const Path p = simulate_reflected(refl, g.rod_id(8), 0.0, rng);
  CHECK(p.t.size() == 1);
  CHECK(p.v[0] == g.rod_id(8));
  // Killed walk started on the boundary is absorbed at time zero.
  const std::uint32_t last = g.rod_id(g.rod_count);
  const Path q = simulate_killed(full, last, 1.0, rng);
  CHECK(q.absorbed);
  CHECK(q.absorb_time == 0.0);
}

TEST_CASE("jump counts are Poisson at rate 2^2k") {
  const LatticeGraph& g = k3_graph();
  const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
  const int n = 2000;
  std::vector<double> counts(n);
  parallel_paths(n, 1, 20250825, [&](std::uint64_t i, RngStream& rng) {
    int jumps = 0;
    run_reflected(kern, g.plane_id(80, 0), 1.0, rng, [&](double, std::uint32_t) { ++jumps; });
    counts[i] = jumps;
  });
  const MeanVar mv = mean_var(counts);
  CHECK(std::abs(mv.mean - 64.0) <= 4.0 * std::sqrt(64.0 / n));
  CHECK(mv.var == doctest::Approx(64.0).epsilon(0.15));  // Poisson: var = mean
}

TEST_CASE("rod exit time matches the exact mean (x-a)(b-x)") {
  // Symmetric walk on the rod started at 10; mean exit time of (5, 15) is
  // (10-5)(15-10)/(h^2 lambda) time units = 25 exactly at every k.
  const LatticeGraph& g = k3_graph();
  const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
  const long long S = g.params.scale();
  const std::uint32_t lo = g.rod_id(5 * S), hi = g.rod_id(15 * S);
  const int n = 4000;
  std::vector<double> tau(n);
  parallel_paths(n, 1, 20250825, [&](std::uint64_t i, RngStream& rng) {
    std::uint32_t x = g.rod_id(10 * S);
    double t = 0.0;
    while (x != lo && x != hi) {
      t += rng.exponential(kern.lambda);
      x = kern.sample_next(x, rng);
    }
    tau[i] = t;
  });
  const MeanVar mv = mean_var(tau);
  CHECK(std::abs(mv.mean - 25.0) <= 4.0 * mv.se());
  CHECK(mv.se() < 1.0);
}

TEST_CASE("parallel fan-out is worker-count independent") {
  const LatticeGraph& g = k3_graph();
  const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
  auto endpoints = [&](int threads) {
    std::vector<std::uint32_t> out(500);
    parallel_paths(500, threads, 99, [&](std::uint64_t i, RngStream& rng) {
      const Path p = simulate_reflected(kern, kStarId, 0.5, rng);
      out[i] = p.final_state();
    });
    return out;
  };
  CHECK(endpoints(1) == endpoints(3));
}

TEST_CASE("resurrected walk replays the killed walk until first absorption") {
  const LatticeGraph& g = k3_graph();
  const JumpKernel full = make_kernel(g, KernelVariant::Full);
  // Start near the outer boundary so absorption happens quickly.
  const std::uint32_t x0 = g.rod_id(g.rod_count - 2);
  int checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    RngStream r1(7, i), r2(7, i);
    const Path pk = simulate_killed(full, x0, 2.0, r1);
    const Path pr = resurrect_inw(full, x0, 2.0, r2);
    if (!pk.absorbed) continue;
    ++checked;
    // Identical jump times and states strictly before the absorption time.
    REQUIRE(pk.t.size() >= 2);
    for (std::size_t l = 0; l + 1 < pk.t.size(); ++l) {
      CHECK(pr.t[l] == pk.t[l]);
      CHECK(pr.v[l] == pk.v[l]);
    }
    // At the absorption time the resurrected walk sits at the left limit.
    const double ta = pk.absorb_time;
    CHECK(pr.state_at(ta) == pk.v[pk.v.size() - 2]);
    // The resurrected walk never occupies boundary vertices.
    for (std::uint32_t v : pr.v) CHECK((g.flags_of(v) & kFlagBoundary) == 0);
  }
  CHECK(checked > 100);
}

TEST_CASE("start distribution sampling matches its weights") {
  std::vector<double> w = {1.0, 0.0, 3.0, 0.0, 4.0};
  StartDistribution d(w);
  RngStream rng(5, 0);
  std::map<std::uint32_t, long long> counts;
  const int n = 80000;
  for (int i = 0; i < n; ++i) counts[d.sample(rng)]++;
  CHECK(counts[1] == 0);
  CHECK(counts[3] == 0);
  CHECK(std::abs(counts[0] - n / 8.0) < 5 * std::sqrt(n * 0.125));
  CHECK(std::abs(counts[2] - 3.0 * n / 8.0) < 5 * std::sqrt(n * 0.375));
  CHECK(std::abs(counts[4] - 4.0 * n / 8.0) < 5 * std::sqrt(n * 0.5));
}

TEST_CASE("occupation statistics on a hand-built path") {
  Path p;
  p.k = 3;
  p.t = {0.0, 0.25, 0.75};
  p.v = {2, 5, 2};
  p.horizon = 1.0;
  p.absorbed = true;
  p.absorb_time = 0.9;  // absorbed while at state 2
  const OccupationStats st = occupation_and_marginals({p}, {0.1, 0.5, 0.95}, 8);
  CHECK(st.marginals[0][0] == 2);
  CHECK(st.marginals[1][0] == 5);
  CHECK(st.marginals[2][0] == kCemetery);
  // Time in state 2: [0,0.25) + [0.75,0.9) = 0.4 of 0.9 alive time.
  CHECK(st.occupation[2] == doctest::Approx(0.4 / 0.9));
  CHECK(st.occupation[5] == doctest::Approx(0.5 / 0.9));
}
