#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vardim/geometry.hpp"

using namespace vardim;

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_from_string("3") == Rat(3));
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("1.5") == Rat(3, 2));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_to_string(Rat(3, 2)) == "3/2");
  CHECK(rat_to_string(Rat(4)) == "4");
  CHECK(to_double(Rat(1, 4)) == 0.25);
}

TEST_CASE("rho norm on each component") {
  const double eps = 1.0;
  CHECK(rho_norm(EPoint::star(), eps) == 0.0);
  CHECK(rho_norm(EPoint::rod(2.5), eps) == 2.5);
  CHECK(rho_norm(EPoint::plane(3.0, 4.0), eps) == doctest::Approx(4.0));  // |x| = 5
  CHECK(rho_norm(EPoint::plane(-2.0, 0.0), eps) == doctest::Approx(1.0));
}

TEST_CASE("geodesic metric") {
  const double eps = 1.0;
  const EPoint a = EPoint::plane(3.0, 0.0);
  const EPoint b = EPoint::plane(-3.0, 0.0);
  // Straight line 6 vs through the darning point 2 + 2 = 4.
  CHECK(geodesic_rho(a, b, eps) == doctest::Approx(4.0));
  const EPoint c = EPoint::plane(3.0, 0.1);
  CHECK(geodesic_rho(a, c, eps) == doctest::Approx(0.1));
  // Cross-component: sum of darning distances.
  CHECK(geodesic_rho(a, EPoint::rod(1.5), eps) == doctest::Approx(2.0 + 1.5));
  CHECK(geodesic_rho(EPoint::rod(1.0), EPoint::rod(3.0), eps) == doctest::Approx(2.0));
  CHECK(geodesic_rho(EPoint::star(), a, eps) == doctest::Approx(2.0));
  // Symmetry.
  CHECK(geodesic_rho(b, a, eps) == geodesic_rho(a, b, eps));
  // Plane points inside the closed disk are not in the state space.
  CHECK_THROWS_AS(geodesic_rho(EPoint::plane(0.5, 0.0), a, eps), std::invalid_argument);
}

TEST_CASE("projection maps") {
  const double eps = 1.0;
  const auto fs = project_f(EPoint::star(), eps);
  CHECK(fs[0] == 0.0);
  CHECK(fs[1] == 0.0);
  CHECK(fs[2] == 0.0);
  const auto fr = project_f(EPoint::rod(2.0), eps);
  CHECK(fr[0] == 0.0);
  CHECK(fr[1] == 0.0);
  CHECK(fr[2] == 2.0);
  const auto fp = project_f(EPoint::plane(3.0, 4.0), eps);
  // (|x|-eps) x/|x| with |x| = 5: (4/5)(3, 4).
  CHECK(fp[0] == doctest::Approx(2.4));
  CHECK(fp[1] == doctest::Approx(3.2));
  CHECK(fp[2] == 0.0);
  // |(f1,f2,f3)| equals the rho norm on every component.
  for (const EPoint& p :
       {EPoint::plane(1.25, -0.75), EPoint::rod(0.125), EPoint::star(), EPoint::plane(-7, 11)}) {
    const auto f = project_f(p, eps);
    CHECK(std::sqrt(f[0] * f[0] + f[1] * f[1] + f[2] * f[2]) ==
          doctest::Approx(rho_norm(p, eps)).epsilon(1e-12));
  }
}

TEST_CASE("lattice parameter invariants") {
  LatticeParams ok{3, Rat(1), Rat(20), Rat(20)};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.h() == 0.125);
  CHECK(ok.scale() == 8);

  LatticeParams coarse{1, Rat(1), Rat(20), Rat(20)};  // 2^-1 >= eps/4
  CHECK_THROWS_WITH_AS(coarse.validate(), doctest::Contains("2^-k < eps/4"),
                       std::invalid_argument);
  LatticeParams small_r{3, Rat(1), Rat(10), Rat(20)};  // R - eps <= 16 eps
  CHECK_THROWS_WITH_AS(small_r.validate(), doctest::Contains("R - eps > 16 eps"),
                       std::invalid_argument);
  LatticeParams small_l{3, Rat(1), Rat(20), Rat(8)};  // L <= 16 eps
  CHECK_THROWS_WITH_AS(small_l.validate(), doctest::Contains("L > 16 eps"),
                       std::invalid_argument);
}
