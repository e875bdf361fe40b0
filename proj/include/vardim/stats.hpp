#pragma once

#include <cstddef>
#include <vector>

namespace vardim {

struct MeanVar {
  double mean = 0.0;
  double var = 0.0;  // unbiased sample variance
  std::size_t n = 0;
  double se() const;  // standard error of the mean
};
MeanVar mean_var(const std::vector<double>& xs);

// Regularized upper incomplete gamma Q(a, x) (series + continued fraction).
double gamma_q(double a, double x);

// Survival function of the chi-square distribution with `dof` degrees of
// freedom: P[X > x].
double chi2_sf(double x, double dof);

// Two-sample Kolmogorov-Smirnov distance; both samples are sorted in place.
double ks_distance(std::vector<double>& a, std::vector<double>& b);

// Hotelling-type stationarity statistic: given per-observation bin fractions
// (rows = observations, cols = bins) and expected fractions, computes
// T^2 = n d' S^+ d with the empirical covariance S (pseudo-inverse on the
// numerically nonzero eigenspace) and returns the chi-square p-value with
// rank(S^+) degrees of freedom.
struct HotellingResult {
  double t2 = 0.0;
  int rank = 0;
  double p_value = 0.0;
};
HotellingResult hotelling_test(const std::vector<std::vector<double>>& fractions,
                               const std::vector<double>& expected);

}  // namespace vardim
