#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vardim/kernel.hpp"
#include "vardim/testfunc.hpp"

namespace vardim {

// Discrete generator L~_k f(x) = 2^2k sum_y (f(y) - f(x)) j~(x, y) for every
// vertex, with the reflected kernel. `values` may be any per-vertex vector
// (e.g. a projection map sampled on the lattice).
std::vector<double> discrete_generator(const JumpKernel& kernel,
                                       const std::vector<double>& values);

// Convenience: evaluates the test function on every vertex.
std::vector<double> vertex_values(const LatticeGraph& g, const TestFunction& f);

// Per-vertex jump rate of the predictable quadratic variation of the
// martingale part of f(X): 2^2k sum_y (f(y) - f(x))^2 j~(x, y).
std::vector<double> qv_rate(const JumpKernel& kernel, const std::vector<double>& values);

struct GeneratorReport {
  std::string f_name;
  int k0 = 0;
  std::vector<int> ks;
  std::vector<double> sup_err;        // sup over the regular set at level k0
  std::vector<double> max_abs_gen;    // max |L~_k f| over all vertices
  std::vector<double> mbar_outside;   // mbar(E_0^k minus regular set), normalized
  double slope = 0.0;                 // least-squares slope of log2(sup_err) vs k
};

// Measures uniform convergence of L~_k f to the continuum generator on the
// fixed regular set of the coarsest level k0 = k_lo, over k = k_lo..k_hi.
// graph_of(k) supplies the (cached) graph at level k.
GeneratorReport convergence_report(const TestFunction& f, int k_lo, int k_hi,
                                   const std::function<const LatticeGraph&(int)>& graph_of);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace vardim
