#pragma once

#include <functional>

#include "vardim/geometry.hpp"
#include "vardim/testfunc.hpp"

namespace vardim {

// Midpoint rule on [a, b] with n cells.
double integrate_rod(const std::function<double(double)>& f, double a, double b, long long n);

// Midpoint rule in polar coordinates over the annulus eps < r < R.
double integrate_annulus(const std::function<double(double, double)>& f_xy, double eps, double R,
                         long long nr, long long ntheta);

// Integral of a test function against Lebesgue measure on the bounded domain
// (area on the annulus component + length on the rod [0, L)).
double integrate_domain(const TestFunction& f, const LatticeParams& params, long long nr,
                        long long ntheta, long long nrod);

}  // namespace vardim
