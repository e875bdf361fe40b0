#include "vardim/generator.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace vardim {

std::vector<double> vertex_values(const LatticeGraph& g, const TestFunction& f) {
  std::vector<double> vals(g.vertex_count());
  for (std::uint32_t id = 0; id < g.vertex_count(); ++id) vals[id] = f.value(g.point(id));
  return vals;
}

namespace {

// Applies op over the reflected one-step distribution at x.
template <class Op>
double star_row_sum(const JumpKernel& k, const std::vector<double>& vals, Op&& op) {
  const LatticeGraph& g = *k.g;
  const double fx = vals[kStarId];
  double acc = k.star_rod.value() * op(vals[g.rod1_id()] - fx);
  const double pp = k.star_plane.value();
  for (std::uint32_t y : g.star_plane) acc += pp * op(vals[y] - fx);
  return acc;
}

template <class Op>
std::vector<double> kernel_moment(const JumpKernel& kernel, const std::vector<double>& vals,
                                  Op&& op) {
  if (kernel.variant != KernelVariant::Reflected)
    throw std::invalid_argument("discrete generator uses the reflected kernel");
  const LatticeGraph& g = *kernel.g;
  std::vector<double> out(g.vertex_count());
  out[kStarId] = kernel.lambda * star_row_sum(kernel, vals, op);
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    const int vd = g.vdom_of(x);
    const double fx = vals[x];
    double acc = 0.0;
    for (int s = 0; s < vd; ++s) acc += op(vals[g.adj[x - 1][s]] - fx);
    out[x] = kernel.lambda * acc / vd;
  }
  return out;
}

}  // namespace

std::vector<double> discrete_generator(const JumpKernel& kernel, const std::vector<double>& vals) {
  return kernel_moment(kernel, vals, [](double d) { return d; });
}

std::vector<double> qv_rate(const JumpKernel& kernel, const std::vector<double>& vals) {
  return kernel_moment(kernel, vals, [](double d) { return d * d; });
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

GeneratorReport convergence_report(const TestFunction& f, int k_lo, int k_hi,
                                   const std::function<const LatticeGraph&(int)>& graph_of) {
  GeneratorReport rep;
  rep.f_name = f.name();
  rep.k0 = k_lo;

  // Fixed measurement set: the regular vertices of the coarsest level,
  // identified by their physical coordinates (grid indices scale by 2^(k-k0)).
  const LatticeGraph& g0 = graph_of(k_lo);
  std::vector<std::uint32_t> base_regular;
  for (std::uint32_t id = 1; id < g0.vertex_count(); ++id)
    if (g0.flags_of(id) & kFlagRegular) base_regular.push_back(id);
  if (base_regular.empty()) throw std::invalid_argument("empty regular set at the base level");

  std::vector<double> log2err, kk;
  for (int k = k_lo; k <= k_hi; ++k) {
    const LatticeGraph& g = graph_of(k);
    const JumpKernel kern = make_kernel(g, KernelVariant::Reflected);
    const std::vector<double> vals = vertex_values(g, f);
    const std::vector<double> gen = discrete_generator(kern, vals);

    double sup = 0.0;
    const long long scale = 1LL << (k - k_lo);
    for (std::uint32_t id0 : base_regular) {
      std::uint32_t id;
      if (g0.is_plane(id0)) {
        id = g.plane_id(g0.gi[id0 - 1] * scale, g0.gj[id0 - 1] * scale);
      } else {
        id = g.rod_id(g0.rod_n(id0) * scale);
      }
      if (id == kNoVertex) throw std::logic_error("base regular vertex missing at finer level");
      const double err = std::abs(gen[id] - f.generator(g.point(id)));
      sup = std::max(sup, err);
    }
    double max_abs = 0.0;
    for (double v : gen) max_abs = std::max(max_abs, std::abs(v));

    const MeasureTable t = measures(g);
    long long outside = 0, total = 0;
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
      total += t.num_mbar[id];
      if (!(g.flags_of(id) & kFlagRegular)) outside += t.num_mbar[id];
    }

    rep.ks.push_back(k);
    rep.sup_err.push_back(sup);
    rep.max_abs_gen.push_back(max_abs);
    rep.mbar_outside.push_back(static_cast<double>(outside) / static_cast<double>(total));
    kk.push_back(k);
    log2err.push_back(std::log2(std::max(sup, 1e-300)));
  }
  rep.slope = fit_slope(kk, log2err);
  return rep;
}

}  // namespace vardim
