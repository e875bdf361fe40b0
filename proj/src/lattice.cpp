#include "vardim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace vardim {

namespace {

// Exact integer geometry at scale S = 2^k with rational radii.
struct IntGeom {
  long long S;
  long long pe, qe;  // eps = pe/qe
  long long pr, qr;  // R = pr/qr
  long long disk2;   // pe^2 S^2, compare against (i^2+j^2) qe^2
  long long dom2;    // pr^2 S^2, compare against (i^2+j^2) qr^2

  explicit IntGeom(const LatticeParams& p)
      : S(p.scale()),
        pe(p.eps.numerator()),
        qe(p.eps.denominator()),
        pr(p.R.numerator()),
        qr(p.R.denominator()),
        disk2(pe * pe * S * S),
        dom2(pr * pr * S * S) {}

  bool in_disk(long long i, long long j) const { return (i * i + j * j) * qe * qe <= disk2; }
  bool in_domain(long long i, long long j) const { return (i * i + j * j) * qr * qr < dom2; }

  // Closed axis-aligned unit-mesh segment intersects the closed disk although
  // both endpoints lie outside: happens only when the segment straddles the
  // perpendicular foot, i.e. the moving coordinate changes sign (or touches
  // 0) and the fixed coordinate is within the disk radius.
  bool segment_blocked(long long i, long long j, long long ni, long long nj) const {
    if (j == nj)  // horizontal move
      return std::min(i, ni) <= 0 && std::max(i, ni) >= 0 && j * j * qe * qe <= disk2;
    return std::min(j, nj) <= 0 && std::max(j, nj) >= 0 && i * i * qe * qe <= disk2;
  }
};

}  // namespace

EPoint LatticeGraph::point(std::uint32_t id) const {
  const double h = params.h();
  if (is_star(id)) return EPoint::star();
  if (is_plane(id)) return EPoint::plane(gi[id - 1] * h, gj[id - 1] * h);
  return EPoint::rod(static_cast<double>(rod_n(id)) * h);
}

std::uint32_t LatticeGraph::plane_id(std::int32_t i, std::int32_t j) const {
  auto it = std::upper_bound(runs.begin(), runs.end(), std::pair<std::int32_t, std::int32_t>{i, j},
                             [](const auto& key, const Run& r) {
                               return key.first < r.i || (key.first == r.i && key.second < r.j_lo);
                             });
  if (it == runs.begin()) return kNoVertex;
  const Run& r = *(it - 1);
  if (r.i != i || j < r.j_lo || j > r.j_hi) return kNoVertex;
  return r.id0 + static_cast<std::uint32_t>(j - r.j_lo);
}

LatticeGraph build_graphs(const LatticeParams& params) {
  params.validate();
  if (params.k > 16) throw std::invalid_argument("k too large for exact 64-bit construction");
  LatticeGraph g;
  g.params = params;
  const IntGeom geo(params);

  // Pass 1: enumerate plane vertices of the domain in lexicographic order.
  const long long i_max = (geo.pr * geo.S) / geo.qr;
  for (long long i = -i_max; i <= i_max; ++i) {
    // largest |j| still inside the domain circle
    double rem = static_cast<double>(geo.dom2) / (static_cast<double>(geo.qr) * geo.qr) -
                 static_cast<double>(i) * static_cast<double>(i);
    if (rem < 0) continue;
    long long jb = static_cast<long long>(std::sqrt(rem)) + 2;
    while (jb >= 0 && !geo.in_domain(i, jb)) --jb;
    if (jb < 0) continue;
    bool in_run = false;
    for (long long j = -jb; j <= jb; ++j) {
      if (geo.in_disk(i, j)) {
        in_run = false;
        continue;
      }
      if (!in_run) {
        g.runs.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                          static_cast<std::int32_t>(j),
                          static_cast<std::uint32_t>(g.gi.size() + 1)});
        in_run = true;
      } else {
        g.runs.back().j_hi = static_cast<std::int32_t>(j);
      }
      g.gi.push_back(static_cast<std::int32_t>(i));
      g.gj.push_back(static_cast<std::int32_t>(j));
    }
  }
  g.plane_count = static_cast<std::int64_t>(g.gi.size());

  // Rod vertices: n h < L, i.e. n ql < pl S.
  const long long pl = params.L.numerator(), ql = params.L.denominator();
  const long long n_max = (pl * geo.S + ql - 1) / ql - 1;
  if (n_max < 1) throw std::invalid_argument("rod domain holds no lattice vertex");
  g.rod_count = n_max;

  const std::size_t non_star = static_cast<std::size_t>(g.plane_count + g.rod_count);
  g.adj.assign(non_star, {kNoVertex, kNoVertex, kNoVertex, kNoVertex});
  g.v_full.assign(non_star, 0);
  g.v_dom.assign(non_star, 0);
  g.flags.assign(non_star, 0);

  // Pass 2: plane adjacency and degrees.
  static constexpr int kDirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (std::int64_t idx = 0; idx < g.plane_count; ++idx) {
    const long long i = g.gi[idx], j = g.gj[idx];
    int vf = 0, vd = 0, slot = 0;
    bool star_adj = false;
    auto& slots = g.adj[idx];
    for (const auto& d : kDirs) {
      const long long ni = i + d[0], nj = j + d[1];
      if (geo.in_disk(ni, nj)) {
        star_adj = true;  // neighbour collapsed into the darning vertex
        continue;
      }
      if (geo.segment_blocked(i, j, ni, nj)) continue;
      ++vf;
      if (geo.in_domain(ni, nj)) {
        ++vd;
        slots[slot++] = g.plane_id(static_cast<std::int32_t>(ni), static_cast<std::int32_t>(nj));
      }
    }
    if (star_adj) {
      ++vf;
      ++vd;
      slots[slot++] = kStarId;
      g.star_plane.push_back(static_cast<std::uint32_t>(idx + 1));
    }
    g.v_full[idx] = static_cast<std::uint8_t>(vf);
    g.v_dom[idx] = static_cast<std::uint8_t>(vd);
    std::uint8_t fl = 0;
    if (vd == 4) fl |= kFlagRegular;
    if (vd < vf && vf == 4) fl |= kFlagBoundary;
    if (star_adj) fl |= kFlagRing;
    g.flags[idx] = fl;
  }

  // Pass 3: rod adjacency and degrees.
  for (long long n = 1; n <= n_max; ++n) {
    const std::size_t idx = static_cast<std::size_t>(g.plane_count + n - 1);
    auto& slots = g.adj[idx];
    int slot = 0, vd = 1;
    slots[slot++] = (n == 1) ? kStarId : g.rod_id(n - 1);
    if (n + 1 <= n_max) {
      slots[slot++] = g.rod_id(n + 1);
      vd = 2;
    }
    g.v_full[idx] = 2;
    g.v_dom[idx] = static_cast<std::uint8_t>(vd);
    std::uint8_t fl = 0;
    if (vd == 2) fl |= kFlagRegular;
    if (vd < 2) fl |= kFlagBoundary;
    if (n == 1) fl |= kFlagRing;
    g.flags[idx] = fl;
  }
  return g;
}

Classification classify(const LatticeGraph& g) {
  Classification c;
  c.core.push_back(kStarId);
  for (std::uint32_t id = 1; id < g.vertex_count(); ++id) {
    const std::uint8_t fl = g.flags_of(id);
    if (fl & kFlagBoundary) c.boundary.push_back(id);
    if (fl & kFlagRegular) c.regular.push_back(id);
    if (fl & kFlagRing) c.ring.push_back(id);
    if (fl & (kFlagRegular | kFlagRing)) c.core.push_back(id);
  }
  return c;
}

bool graph_connected(const LatticeGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<std::uint32_t> q;
  q.push(kStarId);
  seen[kStarId] = 1;
  std::size_t count = 1;
  auto visit = [&](std::uint32_t y) {
    if (y != kNoVertex && !seen[y]) {
      seen[y] = 1;
      ++count;
      q.push(y);
    }
  };
  while (!q.empty()) {
    const std::uint32_t x = q.front();
    q.pop();
    if (g.is_star(x)) {
      for (std::uint32_t y : g.star_plane) visit(y);
      visit(g.rod1_id());
    } else {
      for (std::uint32_t y : g.adj[x - 1]) visit(y);
    }
  }
  return count == g.vertex_count();
}

void dump_graph(const LatticeGraph& g, std::ostream& os) {
  auto flag_str = [](std::uint8_t fl) {
    std::string s;
    if (fl & kFlagBoundary) s += 'B';
    if (fl & kFlagRegular) s += 'I';
    if (fl & kFlagRing) s += 'N';
    return s.empty() ? std::string("-") : s;
  };
  os << "S 0 0 " << g.star_v() << ' ' << g.star_v() << " -\n";
  for (std::int64_t idx = 0; idx < g.plane_count; ++idx)
    os << "P " << g.gi[idx] << ' ' << g.gj[idx] << ' ' << int(g.v_full[idx]) << ' '
       << int(g.v_dom[idx]) << ' ' << flag_str(g.flags[idx]) << '\n';
  for (std::int64_t n = 1; n <= g.rod_count; ++n) {
    const std::size_t idx = static_cast<std::size_t>(g.plane_count + n - 1);
    os << "R 0 " << n << ' ' << int(g.v_full[idx]) << ' ' << int(g.v_dom[idx]) << ' '
       << flag_str(g.flags[idx]) << '\n';
  }
  os << "edges\n";
  for (std::uint32_t y : g.star_plane) os << "0 " << y << '\n';
  os << "0 " << g.rod1_id() << '\n';
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    std::array<std::uint32_t, 4> nb = g.adj[x - 1];
    std::sort(nb.begin(), nb.end());
    for (std::uint32_t y : nb)
      if (y != kNoVertex && y > x) os << x << ' ' << y << '\n';
  }
}

StarCensus star_census(int k, const Rat& eps) {
  if (k > 16) throw std::invalid_argument("k too large for exact 64-bit census");
  const long long S = 1LL << k;
  const long long pe = eps.numerator(), qe = eps.denominator();
  const long long disk2 = pe * pe * S * S;
  auto in_disk = [&](long long i, long long j) { return (i * i + j * j) * qe * qe <= disk2; };
  const long long b = (pe * S) / qe + 2;
  StarCensus c;
  for (long long i = -b; i <= b; ++i)
    for (long long j = -b; j <= b; ++j) {
      if (in_disk(i, j)) continue;
      if (in_disk(i + 1, j) || in_disk(i - 1, j) || in_disk(i, j + 1) || in_disk(i, j - 1))
        ++c.plane_neighbours;
    }
  const long long v = c.v();
  c.m_star = Rat(1, 2 * S) + Rat(v - 1, 4 * S * S);
  return c;
}

}  // namespace vardim
