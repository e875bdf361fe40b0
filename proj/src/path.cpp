#include "vardim/path.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vardim {

Path time_reverse(const Path& path, double time) {
  if (time > path.horizon) throw std::invalid_argument("reversal time beyond path horizon");
  if (path.absorbed && path.absorb_time <= time)
    throw std::invalid_argument("cannot time-reverse a path absorbed before the reversal time");
  Path r;
  r.k = path.k;
  r.horizon = time;
  // m = last jump index with t[m] <= time
  std::size_t m = path.t.size() - 1;
  while (path.t[m] > time) --m;
  // start value: path(time-) = v[m] unless a jump sits exactly at `time`
  const std::size_t start_idx = (path.t[m] == time && m > 0) ? m - 1 : m;
  r.t.push_back(0.0);
  r.v.push_back(path.v[start_idx]);
  for (std::size_t l = start_idx; l >= 1; --l) {
    r.t.push_back(time - path.t[l]);
    r.v.push_back(path.v[l - 1]);
  }
  return r;
}

void write_path_csv(const Path& path, std::ostream& os) {
  os << "t,vertex\n";
  for (std::size_t l = 0; l < path.t.size(); ++l) os << path.t[l] << ',' << path.v[l] << '\n';
  if (path.absorbed) os << path.absorb_time << ",-1\n";
}

GraphRho::GraphRho(const LatticeGraph& g) {
  const std::uint32_t n = g.vertex_count();
  const double eps = to_double(g.params.eps);
  x1_.resize(n);
  x2_.resize(n);
  rho_.resize(n);
  plane_.resize(n);
  for (std::uint32_t id = 0; id < n; ++id) {
    const EPoint p = g.point(id);
    plane_[id] = (p.kind == Kind::Plane);
    x1_[id] = p.x1;
    x2_[id] = p.x2;
    rho_[id] = rho_norm(p, eps);
  }
}

double GraphRho::rho(std::uint32_t a, std::uint32_t b) const { return std::sqrt(rho2(a, b)); }

ClippedPath clip_path(const Path& path, double T) {
  ClippedPath p;
  p.T = T;
  for (std::size_t l = 0; l < path.t.size() && path.t[l] <= T; ++l) {
    p.t.push_back(path.t[l]);
    p.v.push_back(path.v[l]);
  }
  return p;
}

double modulus_w_rho(const Path& path, const GraphRho& metric, double theta, double T) {
  if (!(theta > 0.0) || !(theta < T))
    throw std::invalid_argument("modulus requires 0 < theta < T");
  return modulus_w_rho_metric(path, metric, theta, T);
}

}  // namespace vardim
