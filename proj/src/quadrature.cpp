#include "vardim/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace vardim {

double integrate_rod(const std::function<double(double)>& f, double a, double b, long long n) {
  if (n <= 0 || !(b > a)) throw std::invalid_argument("bad quadrature interval");
  const double w = (b - a) / static_cast<double>(n);
  double acc = 0.0;
  for (long long i = 0; i < n; ++i) acc += f(a + (i + 0.5) * w);
  return acc * w;
}

double integrate_annulus(const std::function<double(double, double)>& f_xy, double eps, double R,
                         long long nr, long long ntheta) {
  if (nr <= 0 || ntheta <= 0 || !(R > eps)) throw std::invalid_argument("bad annulus quadrature");
  const double wr = (R - eps) / static_cast<double>(nr);
  const double wt = 2.0 * M_PI / static_cast<double>(ntheta);
  double acc = 0.0;
  for (long long i = 0; i < nr; ++i) {
    const double r = eps + (i + 0.5) * wr;
    double ring = 0.0;
    for (long long j = 0; j < ntheta; ++j) {
      const double th = (j + 0.5) * wt;
      ring += f_xy(r * std::cos(th), r * std::sin(th));
    }
    acc += ring * r;
  }
  return acc * wr * wt;
}

double integrate_domain(const TestFunction& f, const LatticeParams& params, long long nr,
                        long long ntheta, long long nrod) {
  const double eps = to_double(params.eps);
  const double R = to_double(params.R);
  const double L = to_double(params.L);
  const double plane_part = integrate_annulus(
      [&](double x, double y) { return f.plane(x, y); }, eps, R, nr, ntheta);
  const double rod_part =
      integrate_rod([&](double s) { return f.rod(s); }, 0.0, L, nrod);
  return plane_part + rod_part;
}

}  // namespace vardim
