#include <doctest.h>

#include <cmath>

#include "vardim/quadrature.hpp"
#include "vardim/testfunc.hpp"

using namespace vardim;

namespace {
const LatticeParams kParams{3, Rat(1), Rat(20), Rat(20)};

bool near_knot(double x, const std::vector<double>& knots, double margin) {
  for (double t : knots)
    if (std::abs(x - t) < margin) return true;
  return false;
}
}  // namespace

TEST_CASE("quadrature basics") {
  CHECK(integrate_rod([](double s) { return s * s; }, 0.0, 1.0, 1 << 12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-7));
  CHECK(integrate_annulus([](double, double) { return 1.0; }, 1.0, 2.0, 512, 512) ==
        doctest::Approx(3.0 * M_PI).epsilon(1e-6));
  // Non-radial integrand: x^2 over the annulus = pi (R^4 - eps^4)/4.
  CHECK(integrate_annulus([](double x, double) { return x * x; }, 1.0, 2.0, 512, 512) ==
        doctest::Approx(M_PI * 15.0 / 4.0).epsilon(1e-5));
  CHECK_THROWS(integrate_rod([](double) { return 0.0; }, 1.0, 0.0, 16));
}

TEST_CASE("canonical functions: continuity and support") {
  const auto fs = canonical_test_functions(kParams);
  REQUIRE(fs.size() == 3);
  for (const auto& f : fs) {
    // Value at the darning point equals the rod trace at 0.
    CHECK(f->star() == f->rod(0.0));
    CHECK(f->value(EPoint::star()) == f->star());
    // Compact support with padding.
    CHECK(f->support_radius < 19.0);
    CHECK(f->support_rod_end < 19.0);
    CHECK(f->plane(f->support_radius + 0.5, 0.0) == 0.0);
    CHECK(f->rod(f->support_rod_end + 0.5) == 0.0);
    // C2 across every rod knot: value, first and second derivative continuous
    // (third derivative jumps are allowed and expected).
    // Two-sided samples at distance d differ by O(d * derivative); allow that
    // drift but nothing larger (a genuine discontinuity would be O(1)).
    const double d = 1e-6;
    for (double t : f->rod_knots) {
      const double slope = 1.0 + std::abs(f->rod_first(t - d)) + std::abs(f->rod_first(t + d));
      CHECK(std::abs(f->rod(t - d) - f->rod(t + d)) < 10 * d * slope);
      CHECK(std::abs(f->rod_first(t - d) - f->rod_first(t + d)) <
            10 * d * (1.0 + std::abs(f->rod_second(t - d)) + std::abs(f->rod_second(t + d))));
      // Second derivative continuous up to the third-derivative jump scale.
      CHECK(std::abs(f->rod_second(t - d) - f->rod_second(t + d)) < 1e-3);
    }
    for (double r : f->plane_knots_r) {
      const double slope = 1.0 + std::abs(f->plane_gradient(r - d, 0.0)[0]) +
                           std::abs(f->plane_gradient(r + d, 0.0)[0]);
      CHECK(std::abs(f->plane(r - d, 0.0) - f->plane(r + d, 0.0)) < 10 * d * slope);
    }
  }
}

TEST_CASE("canonical functions: derivatives match finite differences") {
  const auto fs = canonical_test_functions(kParams);
  const double h = 1e-5;
  for (const auto& f : fs) {
    // Rod derivatives away from knots.
    for (double s = 0.3; s < 12.0; s += 0.7) {
      if (near_knot(s, f->rod_knots, 0.01)) continue;
      const double fd1 = (f->rod(s + h) - f->rod(s - h)) / (2 * h);
      const double fd2 = (f->rod(s + h) - 2 * f->rod(s) + f->rod(s - h)) / (h * h);
      CHECK(f->rod_first(s) == doctest::Approx(fd1).epsilon(1e-6).scale(1.0));
      CHECK(f->rod_second(s) == doctest::Approx(fd2).epsilon(1e-4).scale(1.0));
    }
    // Plane gradient and Laplacian away from radial knots.
    for (double r = 1.3; r < 11.0; r += 0.6) {
      if (near_knot(r, f->plane_knots_r, 0.01)) continue;
      const double c = std::cos(0.7), s2 = std::sin(0.7);
      const double x = r * c, y = r * s2;
      const auto grad = f->plane_gradient(x, y);
      const double gx = (f->plane(x + h, y) - f->plane(x - h, y)) / (2 * h);
      const double gy = (f->plane(x, y + h) - f->plane(x, y - h)) / (2 * h);
      CHECK(grad[0] == doctest::Approx(gx).epsilon(1e-5).scale(1.0));
      CHECK(grad[1] == doctest::Approx(gy).epsilon(1e-5).scale(1.0));
      const double lap = (f->plane(x + h, y) + f->plane(x - h, y) + f->plane(x, y + h) +
                          f->plane(x, y - h) - 4 * f->plane(x, y)) /
                         (h * h);
      CHECK(f->plane_laplacian(x, y) == doctest::Approx(lap).epsilon(1e-3).scale(1.0));
    }
    // Generator consistency: (1/4) Laplacian on the plane, (1/2) f'' on the
    // rod, rod-side limit at the darning point.
    CHECK(f->generator(EPoint::plane(5.0, 0.5)) ==
          doctest::Approx(0.25 * f->plane_laplacian(5.0, 0.5)));
    CHECK(f->generator(EPoint::rod(3.3)) == doctest::Approx(0.5 * f->rod_second(3.3)));
    CHECK(f->generator(EPoint::star()) == doctest::Approx(0.5 * f->rod_second(0.0)));
  }
}

TEST_CASE("radial function vanishes quadratically at the disk") {
  const auto fs = canonical_test_functions(kParams);
  const TestFunction& f = *fs[0];
  CHECK(f.plane(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(f.plane(1.01, 0.0) == doctest::Approx(1e-4).epsilon(0.05));
  // Rod piece has s(0) = s'(0) = 0 so the discrete generator stays bounded at
  // the darning vertex.
  CHECK(f.rod(0.0) == 0.0);
  CHECK(f.rod_first(0.0) == 0.0);
}
