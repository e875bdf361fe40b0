#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace vardim {

// Exact rational arithmetic for lattice parameters and measures.
using Rat = boost::rational<long long>;

// Parses "3", "3/2" or "1.5" into an exact rational.
Rat rat_from_string(const std::string& s);

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string rat_to_string(const Rat& r);

}  // namespace vardim
