#include "vardim/walker.hpp"

#include <algorithm>
#include <stdexcept>

namespace vardim {

Path simulate_reflected(const JumpKernel& kernel, std::uint32_t start, double t_max,
                        RngStream& rng) {
  Path p;
  p.k = kernel.g->params.k;
  p.horizon = t_max;
  p.t.push_back(0.0);
  p.v.push_back(start);
  run_reflected(kernel, start, t_max, rng, [&](double t, std::uint32_t x) {
    p.t.push_back(t);
    p.v.push_back(x);
  });
  return p;
}

Path simulate_killed(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng) {
  if (kernel.variant != KernelVariant::Full)
    throw std::invalid_argument("killed walk requires the full kernel variant");
  Path p;
  p.k = kernel.g->params.k;
  p.horizon = t_max;
  p.t.push_back(0.0);
  p.v.push_back(start);
  const double tau = run_killed(kernel, start, t_max, rng, [&](double t, std::uint32_t x) {
    p.t.push_back(t);
    p.v.push_back(x);
  });
  if (tau >= 0.0) {
    p.absorbed = true;
    p.absorb_time = tau;
  }
  return p;
}

Path resurrect_inw(const JumpKernel& kernel, std::uint32_t start, double t_max, RngStream& rng) {
  if (kernel.variant != KernelVariant::Full)
    throw std::invalid_argument("resurrection requires the full kernel variant");
  if (kernel.g->flags_of(start) & kFlagBoundary)
    throw std::invalid_argument("resurrected walk cannot start on the boundary");
  Path p;
  p.k = kernel.g->params.k;
  p.horizon = t_max;
  p.t.push_back(0.0);
  p.v.push_back(start);
  run_resurrected(kernel, start, t_max, rng, [&](double t, std::uint32_t x) {
    p.t.push_back(t);
    p.v.push_back(x);
  });
  return p;
}

StartDistribution::StartDistribution(const std::vector<double>& weights) {
  cum_.resize(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0) throw std::invalid_argument("negative start weight");
    acc += weights[i];
    cum_[i] = acc;
  }
  if (!(acc > 0.0)) throw std::invalid_argument("start distribution has zero total mass");
}

std::uint32_t StartDistribution::sample(RngStream& rng) const {
  const double u = rng.uniform() * cum_.back();
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) --it;
  return static_cast<std::uint32_t>(it - cum_.begin());
}

OccupationStats occupation_and_marginals(const std::vector<Path>& paths,
                                         const std::vector<double>& times,
                                         std::uint32_t vertex_count) {
  if (paths.empty()) throw std::invalid_argument("empty path set");
  OccupationStats st;
  st.occupation.assign(vertex_count, 0.0);
  st.marginals.assign(times.size(), std::vector<std::uint32_t>(paths.size(), kCemetery));
  double total_time = 0.0;
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const Path& p = paths[pi];
    const double end = p.absorbed ? p.absorb_time : p.horizon;
    for (std::size_t l = 0; l < p.t.size(); ++l) {
      const double t1 = (l + 1 < p.t.size()) ? p.t[l + 1] : end;
      st.occupation[p.v[l]] += std::max(0.0, t1 - p.t[l]);
    }
    total_time += end;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      if (p.absorbed && times[ti] >= p.absorb_time)
        st.marginals[ti][pi] = kCemetery;
      else if (times[ti] <= p.horizon)
        st.marginals[ti][pi] = p.state_at(times[ti]);
    }
  }
  if (total_time > 0.0)
    for (auto& o : st.occupation) o /= total_time;
  return st;
}

}  // namespace vardim
