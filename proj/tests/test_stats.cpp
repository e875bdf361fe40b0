#include <doctest.h>

#include <cmath>
#include <vector>

#include "vardim/rng.hpp"
#include "vardim/stats.hpp"

using namespace vardim;

TEST_CASE("chi-square survival function against closed forms") {
  CHECK(chi2_sf(0.0, 3) == 1.0);
  // dof 2: SF(x) = exp(-x/2).
  CHECK(chi2_sf(2.0, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(chi2_sf(4.60517018598809, 2) == doctest::Approx(0.1).epsilon(1e-10));
  // dof 1: SF(x) = erfc(sqrt(x/2)).
  for (double x : {0.5, 1.0, 3.84, 10.0})
    CHECK(chi2_sf(x, 1) == doctest::Approx(std::erfc(std::sqrt(x / 2))).epsilon(1e-12));
  // Frozen textbook quantile: P[chi2_3 > 7.814727903] = 0.05.
  CHECK(chi2_sf(7.814727903251179, 3) == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(gamma_q(2.5, 0.0) == 1.0);
  CHECK_THROWS(gamma_q(-1.0, 1.0));
}

TEST_CASE("two-sample KS distance") {
  std::vector<double> a = {1.0, 2.0, 3.0};
  std::vector<double> b = {1.5, 2.5};
  CHECK(ks_distance(a, b) == doctest::Approx(1.0 / 3.0));
  std::vector<double> c = {5, 1, 3}, d = {3, 1, 5};
  CHECK(ks_distance(c, d) == 0.0);
  std::vector<double> e = {0, 1}, f = {10, 11};
  CHECK(ks_distance(e, f) == 1.0);
}

TEST_CASE("mean and variance") {
  const MeanVar mv = mean_var({1.0, 2.0, 3.0, 4.0});
  CHECK(mv.mean == 2.5);
  CHECK(mv.var == doctest::Approx(5.0 / 3.0));
  CHECK(mv.se() == doctest::Approx(std::sqrt(5.0 / 12.0)));
}

TEST_CASE("Hotelling test handles correlated and degenerate bins") {
  // Fractions over 3 bins that sum to one: the covariance is singular; the
  // test must drop the degenerate direction and stay finite.
  RngStream rng(2024, 0);
  const int n = 400;
  std::vector<std::vector<double>> rows(n, std::vector<double>(3));
  for (auto& r : rows) {
    const double u = 0.2 + 0.1 * (rng.uniform() - 0.5);
    const double v = 0.3 + 0.1 * (rng.uniform() - 0.5);
    r = {u, v, 1.0 - u - v};
  }
  const HotellingResult null_res = hotelling_test(rows, {0.2, 0.3, 0.5});
  CHECK(null_res.rank == 2);
  CHECK(null_res.p_value > 0.01);
  const HotellingResult alt_res = hotelling_test(rows, {0.25, 0.25, 0.5});
  CHECK(alt_res.p_value < 1e-6);
  CHECK(alt_res.t2 > null_res.t2);
  // Too few observations for a stable covariance: rejected.
  rows.resize(4);
  CHECK_THROWS(hotelling_test(rows, {0.2, 0.3, 0.5}));
}
