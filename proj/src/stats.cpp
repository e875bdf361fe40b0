#include "vardim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace vardim {

double MeanVar::se() const { return n > 1 ? std::sqrt(var / static_cast<double>(n)) : 0.0; }

MeanVar mean_var(const std::vector<double>& xs) {
  MeanVar mv;
  mv.n = xs.size();
  if (xs.empty()) return mv;
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(xs.size());
  double s2 = 0.0;
  for (double x : xs) s2 += (x - m) * (x - m);
  mv.mean = m;
  mv.var = xs.size() > 1 ? s2 / static_cast<double>(xs.size() - 1) : 0.0;
  return mv;
}

namespace {

// Lower regularized incomplete gamma P(a, x) by series expansion (x < a+1).
double gamma_p_series(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a, x) by continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q domain error");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi2_sf(double x, double dof) { return gamma_q(0.5 * dof, 0.5 * x); }

double ks_distance(std::vector<double>& a, std::vector<double>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty KS sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return d;
}

HotellingResult hotelling_test(const std::vector<std::vector<double>>& fractions,
                               const std::vector<double>& expected) {
  const std::size_t n = fractions.size();
  const std::size_t b = expected.size();
  if (n < 2 * b) throw std::invalid_argument("too few observations for the covariance estimate");

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(b));
  for (const auto& row : fractions)
    for (std::size_t j = 0; j < b; ++j) mean(static_cast<Eigen::Index>(j)) += row[j];
  mean /= static_cast<double>(n);

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b),
                                              static_cast<Eigen::Index>(b));
  Eigen::VectorXd d(static_cast<Eigen::Index>(b));
  for (const auto& row : fractions) {
    for (std::size_t j = 0; j < b; ++j)
      d(static_cast<Eigen::Index>(j)) = row[j] - mean(static_cast<Eigen::Index>(j));
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  const Eigen::VectorXd evals = es.eigenvalues();
  const double tol = evals.maxCoeff() * 1e-9;

  for (std::size_t j = 0; j < b; ++j)
    d(static_cast<Eigen::Index>(j)) = mean(static_cast<Eigen::Index>(j)) - expected[j];
  const Eigen::VectorXd proj = es.eigenvectors().transpose() * d;

  HotellingResult res;
  double t2 = 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) > tol) {
      t2 += proj(i) * proj(i) / evals(i);
      ++rank;
    }
  }
  res.t2 = static_cast<double>(n) * t2;
  res.rank = rank;
  res.p_value = chi2_sf(res.t2, static_cast<double>(rank));
  return res;
}

}  // namespace vardim
