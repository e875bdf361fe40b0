#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vardim/geometry.hpp"

namespace vardim {

inline constexpr std::uint32_t kNoVertex = 0xffffffffu;
inline constexpr std::uint32_t kStarId = 0;

// Per-vertex classification bits.
enum VertexFlags : std::uint8_t {
  kFlagBoundary = 1,  // in the lattice boundary of the domain (v_dom < v_full, v_full full)
  kFlagRegular = 2,   // regular interior: full degree within the domain graph
  kFlagRing = 4,      // adjacent to the darning vertex in the domain graph
};

// Immutable adjacency structure of the truncated lattice graph at mesh 2^-k.
//
// Vertices: id 0 is the darning vertex (Star); plane vertices follow in
// lexicographic (i, j) order; rod vertices n = 1.. follow in ascending order.
// Only vertices of the bounded domain E_0 are materialized; the one-ring of
// exterior vertices is accounted for in the full-graph degree v_full without
// being materialized. Grid points inside the closed disk |x| <= eps collapse
// into the Star vertex.
struct LatticeGraph {
  LatticeParams params;
  std::int64_t plane_count = 0;
  std::int64_t rod_count = 0;

  std::vector<std::int32_t> gi, gj;  // plane grid coordinates, units of 2^-k

  // Domain-graph adjacency for non-Star vertices, indexed by id-1. Unused
  // slots hold kNoVertex; an edge to the Star vertex is stored as id 0.
  std::vector<std::array<std::uint32_t, 4>> adj;
  std::vector<std::uint8_t> v_full;  // degree in the full (untruncated) graph
  std::vector<std::uint8_t> v_dom;   // degree in the domain graph
  std::vector<std::uint8_t> flags;   // VertexFlags per non-Star vertex

  std::vector<std::uint32_t> star_plane;  // Star's plane neighbours, ascending id

  // Plane id lookup: maximal contiguous runs of j per i, ordered.
  struct Run {
    std::int32_t i, j_lo, j_hi;  // inclusive j range
    std::uint32_t id0;           // id of (i, j_lo)
  };
  std::vector<Run> runs;

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(1 + plane_count + rod_count);
  }
  bool is_star(std::uint32_t id) const { return id == kStarId; }
  bool is_plane(std::uint32_t id) const {
    return id >= 1 && id <= static_cast<std::uint32_t>(plane_count);
  }
  bool is_rod(std::uint32_t id) const {
    return id > static_cast<std::uint32_t>(plane_count) && id < vertex_count();
  }
  std::int64_t rod_n(std::uint32_t id) const { return id - plane_count; }
  std::uint32_t rod_id(std::int64_t n) const {
    return static_cast<std::uint32_t>(plane_count + n);
  }
  std::uint32_t rod1_id() const { return rod_id(1); }

  // Degrees including the Star vertex (whose degree can exceed 255).
  int star_v() const { return static_cast<int>(star_plane.size()) + 1; }
  int vfull_of(std::uint32_t id) const { return id == kStarId ? star_v() : v_full[id - 1]; }
  int vdom_of(std::uint32_t id) const { return id == kStarId ? star_v() : v_dom[id - 1]; }
  std::uint8_t flags_of(std::uint32_t id) const { return id == kStarId ? 0 : flags[id - 1]; }

  EPoint point(std::uint32_t id) const;
  std::uint32_t plane_id(std::int32_t i, std::int32_t j) const;  // kNoVertex if absent
};

// Builds the domain graph plus the degree information of the full graph.
// A plane edge exists iff both endpoints are strictly outside the closed disk
// and the closed segment between them does not intersect the closed disk; a
// Star edge exists iff a plane vertex has at least one grid neighbour inside
// the closed disk. All tests are exact (integer cross-multiplication).
LatticeGraph build_graphs(const LatticeParams& params);

struct Classification {
  std::vector<std::uint32_t> boundary;  // lattice boundary of the domain
  std::vector<std::uint32_t> regular;   // full interior degree (4 plane / 2 rod)
  std::vector<std::uint32_t> ring;      // neighbours of the darning vertex
  std::vector<std::uint32_t> core;      // regular + ring + Star
};
Classification classify(const LatticeGraph& g);

// True iff the domain graph is connected.
bool graph_connected(const LatticeGraph& g);

// Line-oriented dump for golden tests: one vertex per line
// "<variant> <i> <j|n> <v_full> <v_dom> <flags>", then "edges", then one
// "<id> <id>" line per edge with the smaller id first; deterministic order.
void dump_graph(const LatticeGraph& g, std::ostream& os);

// Star-neighbourhood census by direct annulus enumeration; works for any k
// without building the full graph (the Star ring never touches the domain
// boundary under the standing parameter assumptions).
struct StarCensus {
  std::int64_t plane_neighbours = 0;
  std::int64_t v() const { return plane_neighbours + 1; }  // + the rod neighbour
  Rat m_star;  // 2^-k/2 + 2^-2k (v-1)/4
};
StarCensus star_census(int k, const Rat& eps);

}  // namespace vardim
