#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "vardim/geometry.hpp"

namespace vardim {

// A test function on E: compactly supported, C2 on each component (piecewise
// polynomial with third-derivative jumps at knots), constant on the collapsed
// disk with the constant equal to the rod value at 0. Closed-form gradient
// and Laplacian on each component.
class TestFunction {
 public:
  explicit TestFunction(std::string name) : name_(std::move(name)) {}
  virtual ~TestFunction() = default;

  const std::string& name() const { return name_; }

  virtual double plane(double x1, double x2) const = 0;
  virtual double rod(double s) const = 0;
  double star() const { return rod(0.0); }

  virtual std::array<double, 2> plane_gradient(double x1, double x2) const = 0;
  virtual double plane_laplacian(double x1, double x2) const = 0;
  virtual double rod_first(double s) const = 0;
  virtual double rod_second(double s) const = 0;

  double value(const EPoint& p) const;

  // Continuum generator: (1/2) f'' on the rod, (1/4) Laplacian on the plane;
  // at the darning point the rod-side limit (1/2) f''(0+).
  double generator(const EPoint& p) const;

  double support_radius = 0.0;   // plane support contained in |x| <= support_radius
  double support_rod_end = 0.0;  // rod support contained in [0, support_rod_end]

  // Interior knot locations (for tests that must sample away from knots).
  std::vector<double> plane_knots_r;  // radial knots
  std::vector<double> rod_knots;

 private:
  std::string name_;
};

// Three canonical members:
//  (a) radial plane bump (|x|-eps)^2 psi(|x|) matched to a rod piece with
//      s(0) = s'(0) = 0 (quadratic lead-in closed by a truncated-power cubic
//      spline),
//  (b) pure-rod cubic B-spline bump vanishing near the darning point,
//  (c) angular plane function H(|x|) cos(2 theta) with H a cubic B-spline
//      supported away from the disk; zero on the rod.
std::vector<std::unique_ptr<TestFunction>> canonical_test_functions(const LatticeParams& params);

}  // namespace vardim
