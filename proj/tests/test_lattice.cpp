#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "vardim/harness.hpp"
#include "vardim/lattice.hpp"

using namespace vardim;

namespace {

const LatticeGraph& k3_graph() {
  return cached_graph(LatticeParams{3, Rat(1), Rat(20), Rat(20)});
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

TEST_CASE("star census across levels") {
  // Frozen exact counts and darning-vertex masses (eps = 1).
  const std::int64_t expect_nb[] = {48, 92, 184, 364, 728, 1452};
  const Rat expect_m[] = {Rat(1, 4),    Rat(31, 256),  Rat(31, 512),
                          Rat(123, 4096), Rat(123, 8192), Rat(491, 65536)};
  for (int k = 3; k <= 8; ++k) {
    const StarCensus c = star_census(k, Rat(1));
    CHECK(c.plane_neighbours == expect_nb[k - 3]);
    CHECK(c.m_star == expect_m[k - 3]);
    CHECK(c.plane_neighbours <= 56 * (1LL << k) + 28);  // degree bound, eps = 1
  }
}

TEST_CASE("graph structure at k=3") {
  const LatticeGraph& g = k3_graph();
  CHECK(g.plane_count == 80172);
  CHECK(g.rod_count == 159);  // n = 1 .. 20*8 - 1
  CHECK(g.star_v() == 49);    // 48 plane neighbours + the rod
  CHECK(star_census(3, Rat(1)).plane_neighbours ==
        static_cast<std::int64_t>(g.star_plane.size()));

  // Rod 1 joins the darning vertex on the left and rod 2 on the right.
  CHECK(g.adj[g.rod1_id() - 1][0] == kStarId);
  CHECK(g.adj[g.rod1_id() - 1][1] == g.rod_id(2));
  // Last rod vertex: boundary with one domain neighbour.
  const std::uint32_t last = g.rod_id(g.rod_count);
  CHECK(g.vdom_of(last) == 1);
  CHECK(g.vfull_of(last) == 2);
  CHECK((g.flags_of(last) & kFlagBoundary) != 0);

  // id <-> coordinate round trips.
  const std::uint32_t id = g.plane_id(80, -3);
  REQUIRE(id != kNoVertex);
  CHECK(g.gi[id - 1] == 80);
  CHECK(g.gj[id - 1] == -3);
  CHECK(g.plane_id(0, 0) == kNoVertex);    // inside the collapsed disk
  CHECK(g.plane_id(500, 0) == kNoVertex);  // outside the domain
  CHECK(g.point(g.rod_id(8)).x1 == doctest::Approx(1.0));
}

TEST_CASE("classification partitions the graph") {
  const LatticeGraph& g = k3_graph();
  const Classification cls = classify(g);
  CHECK(cls.ring.size() == g.star_plane.size() + 1);  // plane ring + rod 1
  // boundary/regular/ring cover all non-star vertices; boundary and regular
  // are disjoint.
  std::size_t covered = 0;
  for (std::uint32_t id = 1; id < g.vertex_count(); ++id) {
    const auto f = g.flags_of(id);
    CHECK(f != 0);
    CHECK(!((f & kFlagBoundary) && (f & kFlagRegular)));
    ++covered;
  }
  CHECK(covered == g.vertex_count() - 1);
  // Boundary semantics: v_dom < v_full and full free degree.
  for (std::uint32_t id : cls.boundary) {
    CHECK(g.vdom_of(id) < g.vfull_of(id));
    CHECK(g.vfull_of(id) == (g.is_plane(id) ? 4 : 2));
  }
  for (std::uint32_t id : cls.regular) CHECK(g.vdom_of(id) == g.vfull_of(id));
  CHECK(graph_connected(g));
}

TEST_CASE("adjacency is symmetric and disk-avoiding") {
  const LatticeGraph& g = k3_graph();
  const long long S = g.params.scale();  // 8; eps = 1 so the disk is |i|^2 + |j|^2 <= S^2
  long long edges = 0;
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    for (int s = 0; s < g.vdom_of(x); ++s) {
      const std::uint32_t y = g.adj[x - 1][s];
      REQUIRE(y != kNoVertex);
      ++edges;
      if (y == kStarId) {
        // The darning vertex's neighbours: its plane ring plus rod 1.
        CHECK((x == g.rod1_id() ||
               std::binary_search(g.star_plane.begin(), g.star_plane.end(), x)));
        continue;
      }
      // Symmetry: x appears in y's slots.
      const auto& back = g.adj[y - 1];
      CHECK(std::count(back.begin(), back.begin() + g.vdom_of(y), x) == 1);
      if (g.is_plane(x) && g.is_plane(y)) {
        const long long xi = g.gi[x - 1], xj = g.gj[x - 1];
        const long long yi = g.gi[y - 1], yj = g.gj[y - 1];
        CHECK(std::abs(xi - yi) + std::abs(xj - yj) == 1);
        // Independent exact exclusion check: an axis step is blocked iff the
        // moving coordinate straddles 0 while the fixed coordinate is within
        // the disk radius.
        const bool moving_i = xi != yi;
        const long long fixed = moving_i ? xj : xi;
        const long long lo = std::min(moving_i ? xi : xj, moving_i ? yi : yj);
        const bool straddles = lo <= 0 && lo + 1 >= 0;
        CHECK(!(straddles && fixed * fixed <= S * S));
        // Both endpoints strictly outside the closed disk.
        CHECK(xi * xi + xj * xj > S * S);
        CHECK(yi * yi + yj * yj > S * S);
      }
    }
  }
  CHECK(edges > 0);
}

TEST_CASE("graph dump is deterministic with frozen fingerprint") {
  const LatticeGraph& g = k3_graph();
  std::ostringstream a, b;
  dump_graph(g, a);
  dump_graph(g, b);
  const std::string da = a.str();
  CHECK(da == b.str());
  CHECK(static_cast<long>(std::count(da.begin(), da.end(), '\n')) == 240212);
  CHECK(fnv1a(da) == 3682989346159415347ULL);
  CHECK(da.substr(0, 14) == "S 0 0 49 49 -\n");
}

TEST_CASE("graphs honour non-integer disk radii") {
  const LatticeGraph& g = cached_graph(LatticeParams{4, Rat(3, 2), Rat(30), Rat(30)});
  // All plane vertices strictly outside |x| <= 3/2: (i/16)^2+(j/16)^2 > 9/4.
  for (std::uint32_t id = 1; id <= static_cast<std::uint32_t>(g.plane_count); ++id) {
    const long long i = g.gi[id - 1], j = g.gj[id - 1];
    CHECK(4 * (i * i + j * j) > 9 * 16 * 16);
  }
  CHECK(star_census(4, Rat(3, 2)).plane_neighbours ==
        static_cast<std::int64_t>(g.star_plane.size()));
  CHECK(graph_connected(g));
}
