#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "vardim/rational.hpp"

namespace vardim {

// The continuum state space E consists of the punctured plane component
// D_eps = {|x| > eps}, the darning point a* (the collapsed closed disk), and
// the rod [0, infinity) glued to a* at 0.
enum class Kind : std::uint8_t { Star, Plane, Rod };

struct EPoint {
  Kind kind = Kind::Star;
  double x1 = 0.0;  // plane first coordinate, or rod position
  double x2 = 0.0;  // plane second coordinate

  static EPoint star() { return {Kind::Star, 0.0, 0.0}; }
  static EPoint plane(double a, double b) { return {Kind::Plane, a, b}; }
  static EPoint rod(double s) { return {Kind::Rod, s, 0.0}; }
};

// |x|_rho: geodesic distance to the darning point (|x| - eps on the plane,
// the coordinate itself on the rod, 0 at the darning point).
double rho_norm(const EPoint& x, double eps);

// Geodesic metric rho: for two plane points the minimum of the straight-line
// distance and the route through the darning point; across components the sum
// of the two darning distances. Throws for plane points with |x| <= eps.
double geodesic_rho(const EPoint& x, const EPoint& y, double eps);

// Projection maps (f1, f2, f3): plane -> (|x|_rho x1/|x|, |x|_rho x2/|x|, 0),
// rod s -> (0, 0, s), darning point -> (0, 0, 0).
std::array<double, 3> project_f(const EPoint& x, double eps);

// Parameters of the truncated lattice space at mesh 2^-k: disk radius eps,
// planar domain radius R, rod length L (domain E_0 = {|x| < R} + rod [0, L)).
struct LatticeParams {
  int k = 3;
  Rat eps{1};
  Rat R{20};
  Rat L{20};

  // Throws std::invalid_argument naming the violated assumption:
  // 2^-k < eps/4, R - eps > 16 eps, L > 16 eps.
  void validate() const;

  double h() const { return std::ldexp(1.0, -k); }
  long long scale() const { return 1LL << k; }  // 2^k
  bool operator==(const LatticeParams&) const = default;
};

}  // namespace vardim
