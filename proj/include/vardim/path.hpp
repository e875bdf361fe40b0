#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vardim/lattice.hpp"

namespace vardim {

// Right-continuous piecewise-constant trajectory: position on [t[l], t[l+1])
// is v[l]; the final state holds until `horizon` (or until absorption).
struct Path {
  int k = 0;
  std::vector<double> t;        // jump times, t[0] = 0
  std::vector<std::uint32_t> v; // vertex ids, same length as t
  double horizon = 0.0;
  bool absorbed = false;
  double absorb_time = 0.0;     // defined iff absorbed

  std::uint32_t state_at(double time) const {
    // index of the last jump time <= time
    auto it = std::upper_bound(t.begin(), t.end(), time);
    return v[static_cast<std::size_t>(it - t.begin()) - 1];
  }
  std::uint32_t final_state() const { return v.back(); }
};

// Time reversal from time `time`: s -> path((time - s)-) for 0 <= s <= time,
// then frozen at path(0). Requires time <= horizon and, if absorbed, time <
// absorption time. The result is again right-continuous piecewise-constant.
Path time_reverse(const Path& path, double time);

// CSV dump: "t,vertex" rows, one per jump, plus a trailing absorption row
// "t,-1" for absorbed paths.
void write_path_csv(const Path& path, std::ostream& os);

// Squared geodesic metric between vertex ids, precomputed coordinates.
// Sqrt-free: comparisons are made on squared distances.
class GraphRho {
 public:
  explicit GraphRho(const LatticeGraph& g);
  double rho2(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return 0.0;
    const bool pa = plane_[a], pb = plane_[b];
    const double through = rho_[a] + rho_[b];
    if (pa && pb) {
      const double dx = x1_[a] - x1_[b], dy = x2_[a] - x2_[b];
      const double direct2 = dx * dx + dy * dy;
      const double through2 = through * through;
      return direct2 < through2 ? direct2 : through2;
    }
    if (!pa && !pb) {
      const double d = rho_[a] - rho_[b];  // same ray (rod/star)
      return d * d;
    }
    return through * through;
  }
  double rho(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<double> x1_, x2_, rho_;
  std::vector<char> plane_;
};

namespace detail {

// Oscillation tracker over the distinct states of a block; diameter grows
// monotonically as states are inserted.
template <class Metric>
class BlockDiameter {
 public:
  explicit BlockDiameter(const Metric& m) : m_(m) {}
  void reset(std::uint32_t first) {
    states_.clear();
    states_.push_back(first);
    diam2_ = 0.0;
  }
  void add(std::uint32_t s) {
    double best = 0.0;
    for (std::uint32_t q : states_) {
      if (q == s) return;
      best = std::max(best, m_.rho2(q, s));
    }
    states_.push_back(s);
    diam2_ = std::max(diam2_, best);
  }
  double diam2() const { return diam2_; }

 private:
  const Metric& m_;
  std::vector<std::uint32_t> states_;
  double diam2_ = 0.0;
};

}  // namespace detail

// Internal representation of a path clipped to [0, T]: event times plus the
// terminal time T as a sentinel.
struct ClippedPath {
  std::vector<double> t;         // t[0] = 0, strictly increasing, all < T
  std::vector<std::uint32_t> v;  // state on [t[i], t[i+1]) (last: [t.back(), T])
  double T = 0.0;
};
ClippedPath clip_path(const Path& path, double T);

// Feasibility of a theta-separated partition with cut points restricted to
// jump times (plus 0) whose blocks all have rho-oscillation <= delta, where
// delta is given as delta^2 (sqrt-free). Greedy farthest-extension fast path
// with an exact reachability sweep fallback (greedy alone is not exact under
// the minimum-gap constraint).
template <class Metric>
bool w_rho_feasible(const ClippedPath& p, const Metric& metric, double theta, double delta2) {
  const std::size_t n = p.t.size();
  // osc_to_end[i]: largest j such that the block starting at cut i keeps
  // oscillation <= delta2 through event j; final block needs to reach n-1.
  detail::BlockDiameter<Metric> blk(metric);
  // Greedy pass: from cut index c, extend to the farthest cut index c' with
  // t[c'] >= t[c] + theta and osc over [t[c], t[c']) <= delta2.
  std::size_t c = 0;
  while (true) {
    blk.reset(p.v[c]);
    std::size_t reach = c;
    for (std::size_t j = c + 1; j < n; ++j) {
      blk.add(p.v[j]);
      if (blk.diam2() > delta2) break;
      reach = j;
    }
    if (reach == n - 1) return true;  // final block covers through T
    // farthest admissible next cut: largest c' <= reach+? with block
    // [t[c], t[c']) feasible, i.e. c' <= reach + 1 (block excludes v[c']),
    // and gap t[c'] - t[c] >= theta.
    std::size_t next = reach + 1;  // block [t[c], t[next]) spans states c..reach
    if (p.t[next] - p.t[c] < theta - 1e-15) {
      break;  // greedy stuck; fall through to exact sweep
    }
    c = next;
  }
  // Exact reachability sweep over all cut indices (O(n * scan)).
  std::vector<char> reachable(n, 0);
  reachable[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reachable[i]) continue;
    blk.reset(p.v[i]);
    std::size_t reach = i;
    for (std::size_t j = i + 1; j < n; ++j) {
      blk.add(p.v[j]);
      if (blk.diam2() > delta2) break;
      reach = j;
    }
    if (reach == n - 1) return true;
    for (std::size_t next = i + 1; next <= reach + 1 && next < n; ++next) {
      if (p.t[next] - p.t[i] >= theta - 1e-15) reachable[next] = 1;
    }
  }
  return false;
}

// The modulus w_rho(path, theta, T): infimum over theta-separated partitions
// (cuts at jump times) of the maximal block oscillation. Binary search over
// the finitely many attained block-diameter values.
template <class Metric>
double modulus_w_rho_metric(const Path& path, const Metric& metric, double theta, double T) {
  ClippedPath p = clip_path(path, T);
  const std::size_t n = p.t.size();
  if (n <= 1) return 0.0;
  // Candidate values: all pairwise rho2 between distinct states (bounded by
  // distinct-state count, typically far below n).
  std::vector<std::uint32_t> states(p.v);
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  std::vector<double> cand{0.0};
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = a + 1; b < states.size(); ++b)
      cand.push_back(metric.rho2(states[a], states[b]));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;  // lo: maybe infeasible, hi: feasible
  if (w_rho_feasible(p, metric, theta, cand[lo])) return 0.0;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (w_rho_feasible(p, metric, theta, cand[mid]))
      hi = mid;
    else
      lo = mid;
  }
  return std::sqrt(cand[hi]);
}

double modulus_w_rho(const Path& path, const GraphRho& metric, double theta, double T);

}  // namespace vardim
