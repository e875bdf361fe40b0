#include "vardim/testfunc.hpp"

#include <cmath>

namespace vardim {

double TestFunction::value(const EPoint& p) const {
  switch (p.kind) {
    case Kind::Star:
      return star();
    case Kind::Rod:
      return rod(p.x1);
    case Kind::Plane:
      return plane(p.x1, p.x2);
  }
  return 0.0;
}

double TestFunction::generator(const EPoint& p) const {
  switch (p.kind) {
    case Kind::Star:
      return 0.5 * rod_second(0.0);
    case Kind::Rod:
      return 0.5 * rod_second(p.x1);
    case Kind::Plane:
      return 0.25 * plane_laplacian(p.x1, p.x2);
  }
  return 0.0;
}

namespace {

// Cardinal cubic B-spline on knots 0..4 (truncated-power form, C2 with
// third-derivative jumps at the knots); B(2) = 2/3, support [0, 4].
struct CubicBSpline {
  static constexpr double c[5] = {1.0, -4.0, 6.0, -4.0, 1.0};
  static double val(double u) {
    if (u <= 0.0 || u >= 4.0) return 0.0;
    double s = 0.0;
    for (int m = 0; m < 5 && m < u; ++m) {
      const double d = u - m;
      s += c[m] * d * d * d;
    }
    return s / 6.0;
  }
  static double d1(double u) {
    if (u <= 0.0 || u >= 4.0) return 0.0;
    double s = 0.0;
    for (int m = 0; m < 5 && m < u; ++m) {
      const double d = u - m;
      s += c[m] * d * d;
    }
    return 0.5 * s;
  }
  static double d2(double u) {
    if (u <= 0.0 || u >= 4.0) return 0.0;
    double s = 0.0;
    for (int m = 0; m < 5 && m < u; ++m) s += c[m] * (u - m);
    return s;
  }
};

// Quintic smoothstep S(u) = 6u^5 - 15u^4 + 10u^3 on [0,1] (C2 cutoff with
// third-derivative jumps at the ends).
struct SmoothStep {
  static double val(double u) { return ((6 * u - 15) * u + 10) * u * u * u; }
  static double d1(double u) { return ((30 * u - 60) * u + 30) * u * u; }
  static double d2(double u) { return ((120 * u - 180) * u + 60) * u; }
};

// (a) Radial plane bump (r - eps)^2 psi(r) matched to a rod piece with
// s(0) = s'(0) = 0: quadratic lead-in closed by a truncated-power cubic
// spline so the rod part vanishes identically beyond x = 8.
class RadialRodBump final : public TestFunction {
 public:
  explicit RadialRodBump(double eps)
      : TestFunction("radial_rod_bump"), eps_(eps) {
    support_radius = r2_;
    support_rod_end = 8.0;
    plane_knots_r = {r1_, r2_};
    rod_knots = {2.0, 4.0, 6.0, 8.0};
  }

  double plane(double x1, double x2) const override { return u(std::hypot(x1, x2)); }
  std::array<double, 2> plane_gradient(double x1, double x2) const override {
    const double r = std::hypot(x1, x2);
    const double du = u1(r);
    return {du * x1 / r, du * x2 / r};
  }
  double plane_laplacian(double x1, double x2) const override {
    const double r = std::hypot(x1, x2);
    return u2(r) + u1(r) / r;
  }

  double rod(double s) const override {
    if (s <= 0.0 || s >= 8.0) return 0.0;
    double v = s * s;
    for (int i = 0; i < 4; ++i)
      if (s > kT[i]) {
        const double d = s - kT[i];
        v += kC[i] * d * d * d;
      }
    return v;
  }
  double rod_first(double s) const override {
    if (s <= 0.0 || s >= 8.0) return 0.0;
    double v = 2.0 * s;
    for (int i = 0; i < 4; ++i)
      if (s > kT[i]) {
        const double d = s - kT[i];
        v += 3.0 * kC[i] * d * d;
      }
    return v;
  }
  double rod_second(double s) const override {
    if (s < 0.0 || s >= 8.0) return 0.0;
    double v = 2.0;
    for (int i = 0; i < 4; ++i)
      if (s > kT[i]) v += 6.0 * kC[i] * (s - kT[i]);
    return v;
  }

 private:
  // u(r) = (r - eps)^2 for r <= r1, smoothly cut to 0 on [r1, r2].
  double psi(double r) const { return 1.0 - SmoothStep::val((r - r1_) / W_); }
  double psi1(double r) const { return -SmoothStep::d1((r - r1_) / W_) / W_; }
  double psi2(double r) const { return -SmoothStep::d2((r - r1_) / W_) / (W_ * W_); }
  double u(double r) const {
    if (r >= r2_) return 0.0;
    const double q = (r - eps_) * (r - eps_);
    return r <= r1_ ? q : q * psi(r);
  }
  double u1(double r) const {
    if (r >= r2_) return 0.0;
    const double d = r - eps_;
    if (r <= r1_) return 2.0 * d;
    return 2.0 * d * psi(r) + d * d * psi1(r);
  }
  double u2(double r) const {
    if (r >= r2_) return 0.0;
    const double d = r - eps_;
    if (r <= r1_) return 2.0;
    return 2.0 * psi(r) + 4.0 * d * psi1(r) + d * d * psi2(r);
  }

  // Truncated-power spline closing the rod quadratic: coefficients solve the
  // vanishing of the cubic, quadratic, linear and constant parts beyond x=8.
  static constexpr double kT[4] = {2.0, 4.0, 6.0, 8.0};
  static constexpr double kC[4] = {-13.0 / 18.0, 19.0 / 12.0, -7.0 / 6.0, 11.0 / 36.0};

  double eps_;
  double r1_ = 4.0, r2_ = 6.0, W_ = 2.0;
};

// (b) Pure-rod cubic B-spline bump supported on [2, 10].
class RodBump final : public TestFunction {
 public:
  RodBump() : TestFunction("rod_bump") {
    support_radius = 0.0;
    support_rod_end = 10.0;
    rod_knots = {2.0, 4.0, 6.0, 8.0, 10.0};
  }
  double plane(double, double) const override { return 0.0; }
  std::array<double, 2> plane_gradient(double, double) const override { return {0.0, 0.0}; }
  double plane_laplacian(double, double) const override { return 0.0; }
  double rod(double s) const override { return CubicBSpline::val((s - 2.0) / 2.0); }
  double rod_first(double s) const override { return CubicBSpline::d1((s - 2.0) / 2.0) / 2.0; }
  double rod_second(double s) const override { return CubicBSpline::d2((s - 2.0) / 2.0) / 4.0; }
};

// (c) Angular plane function H(r) cos(2 theta), H a cubic B-spline supported
// on [2, 9]; vanishes on a neighbourhood of the disk and on the rod.
class AngularBump final : public TestFunction {
 public:
  AngularBump() : TestFunction("angular_bump") {
    support_radius = 9.0;
    support_rod_end = 0.0;
    plane_knots_r = {2.0, 2.0 + w_, 2.0 + 2 * w_, 2.0 + 3 * w_, 9.0};
  }
  double plane(double x1, double x2) const override {
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    return H(r) * (x1 * x1 - x2 * x2) / r2;
  }
  std::array<double, 2> plane_gradient(double x1, double x2) const override {
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double cos2t = (x1 * x1 - x2 * x2) / r2;
    const double sin2t = 2.0 * x1 * x2 / r2;
    const double fr = H1(r) * cos2t;            // radial derivative
    const double ft = -2.0 * H(r) * sin2t / r;  // angular derivative / r
    return {fr * x1 / r - ft * x2 / r, fr * x2 / r + ft * x1 / r};
  }
  double plane_laplacian(double x1, double x2) const override {
    const double r2 = x1 * x1 + x2 * x2;
    const double r = std::sqrt(r2);
    const double cos2t = (x1 * x1 - x2 * x2) / r2;
    return (H2(r) + H1(r) / r - 4.0 * H(r) / r2) * cos2t;
  }
  double rod(double) const override { return 0.0; }
  double rod_first(double) const override { return 0.0; }
  double rod_second(double) const override { return 0.0; }

 private:
  double H(double r) const { return gamma_ * CubicBSpline::val((r - 2.0) / w_); }
  double H1(double r) const { return gamma_ * CubicBSpline::d1((r - 2.0) / w_) / w_; }
  double H2(double r) const { return gamma_ * CubicBSpline::d2((r - 2.0) / w_) / (w_ * w_); }
  double gamma_ = 4.0, w_ = 1.75;
};

}  // namespace

std::vector<std::unique_ptr<TestFunction>> canonical_test_functions(const LatticeParams& params) {
  params.validate();
  std::vector<std::unique_ptr<TestFunction>> fs;
  fs.push_back(std::make_unique<RadialRodBump>(to_double(params.eps)));
  fs.push_back(std::make_unique<RodBump>());
  fs.push_back(std::make_unique<AngularBump>());
  return fs;
}

}  // namespace vardim
