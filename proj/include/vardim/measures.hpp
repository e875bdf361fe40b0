#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vardim/lattice.hpp"
#include "vardim/rational.hpp"

namespace vardim {

// Lightweight exact fraction used in hot paths (not auto-normalized).
struct Frac {
  long long num = 0;
  long long den = 1;
  Rat rat() const { return Rat(num, den); }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline bool frac_eq(const Frac& a, const Frac& b) {
  return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

// Per-vertex reference measures. Every value of the full-graph measure m and
// of the domain measure mbar is an integer multiple of 2^-(2k+2):
//   plane x: m = 2^-2k v(x)/4            -> numerator v(x)
//   rod   x: m = 2^-k  v(x)/2            -> numerator 2^(k+1) v(x)
//   Star:    m = 2^-k/2 + 2^-2k (v-1)/4  -> numerator 2^(k+1) + v - 1
// with v = v_full for m and v = v_dom for mbar. The speed-scaled measure is
// m0 = 2^2k m (numerator / 4), likewise mbar0.
struct MeasureTable {
  int k = 0;
  long long denom = 0;  // common denominator 2^(2k+2)
  std::vector<long long> num_m, num_mbar;  // indexed by vertex id
  Rat total_m, total_mbar;
  std::vector<double> mbar_d;  // mbar as doubles, for sampling and statistics

  Frac m(std::uint32_t id) const { return {num_m[id], denom}; }
  Frac mbar(std::uint32_t id) const { return {num_mbar[id], denom}; }
  Frac m0(std::uint32_t id) const { return {num_m[id], 4}; }
  Frac mbar0(std::uint32_t id) const { return {num_mbar[id], 4}; }
};

MeasureTable measures(const LatticeGraph& g);

// CSV audit dump: "id,variant,i,j_or_n,m,mbar,m0" in ascending id order.
void write_measures_csv(const LatticeGraph& g, const MeasureTable& t, std::ostream& os);

}  // namespace vardim
