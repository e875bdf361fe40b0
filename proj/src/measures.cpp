#include "vardim/measures.hpp"

#include <ostream>

namespace vardim {

MeasureTable measures(const LatticeGraph& g) {
  MeasureTable t;
  t.k = g.params.k;
  const long long S = g.params.scale();
  t.denom = 4 * S * S;  // 2^(2k+2)
  const std::uint32_t n = g.vertex_count();
  t.num_m.resize(n);
  t.num_mbar.resize(n);
  t.mbar_d.resize(n);

  // Darning vertex: m = 2^-k/2 + 2^-2k (v-1)/4; v_full(a*) == v_dom(a*).
  t.num_m[kStarId] = 2 * S + g.star_v() - 1;
  t.num_mbar[kStarId] = t.num_m[kStarId];

  long long sum_m = t.num_m[kStarId], sum_mbar = t.num_mbar[kStarId];
  for (std::uint32_t id = 1; id < n; ++id) {
    const long long vf = g.vfull_of(id), vd = g.vdom_of(id);
    if (g.is_plane(id)) {
      t.num_m[id] = vf;        // m = 2^-2k v/4
      t.num_mbar[id] = vd;
    } else {
      t.num_m[id] = 2 * S * vf;  // m = 2^-k v/2
      t.num_mbar[id] = 2 * S * vd;
    }
    sum_m += t.num_m[id];
    sum_mbar += t.num_mbar[id];
  }
  t.total_m = Rat(sum_m, t.denom);
  t.total_mbar = Rat(sum_mbar, t.denom);
  const double inv_denom = 1.0 / static_cast<double>(t.denom);
  for (std::uint32_t id = 0; id < n; ++id)
    t.mbar_d[id] = static_cast<double>(t.num_mbar[id]) * inv_denom;
  return t;
}

void write_measures_csv(const LatticeGraph& g, const MeasureTable& t, std::ostream& os) {
  os << "id,variant,i,j_or_n,m,mbar,m0\n";
  for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
    char variant = 'S';
    long long a = 0, b = 0;
    if (g.is_plane(id)) {
      variant = 'P';
      a = g.gi[id - 1];
      b = g.gj[id - 1];
    } else if (g.is_rod(id)) {
      variant = 'R';
      b = g.rod_n(id);
    }
    os << id << ',' << variant << ',' << a << ',' << b << ',' << t.num_m[id] << '/' << t.denom
       << ',' << t.num_mbar[id] << '/' << t.denom << ',' << t.num_m[id] << "/4\n";
  }
}

}  // namespace vardim
