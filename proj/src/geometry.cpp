#include "vardim/geometry.hpp"

#include <stdexcept>
#include <string>

namespace vardim {

namespace {

void check_plane(const EPoint& x, double eps) {
  if (x.kind == Kind::Plane) {
    const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
    if (r2 <= eps * eps)
      throw std::invalid_argument("plane point inside the collapsed disk (|x| <= eps)");
  }
}

}  // namespace

double rho_norm(const EPoint& x, double eps) {
  check_plane(x, eps);
  switch (x.kind) {
    case Kind::Star:
      return 0.0;
    case Kind::Rod:
      return x.x1;
    case Kind::Plane:
      return std::hypot(x.x1, x.x2) - eps;
  }
  return 0.0;
}

double geodesic_rho(const EPoint& x, const EPoint& y, double eps) {
  const double ax = rho_norm(x, eps);
  const double ay = rho_norm(y, eps);
  if (x.kind == Kind::Plane && y.kind == Kind::Plane) {
    const double direct = std::hypot(x.x1 - y.x1, x.x2 - y.x2);
    return std::min(direct, ax + ay);
  }
  if (x.kind == Kind::Rod && y.kind == Kind::Rod) return std::abs(x.x1 - y.x1);
  // Cross-component (or involving the darning point): through the darning point.
  return ax + ay;
}

std::array<double, 3> project_f(const EPoint& x, double eps) {
  switch (x.kind) {
    case Kind::Star:
      return {0.0, 0.0, 0.0};
    case Kind::Rod:
      return {0.0, 0.0, x.x1};
    case Kind::Plane: {
      check_plane(x, eps);
      const double r = std::hypot(x.x1, x.x2);
      const double scale = (r - eps) / r;
      return {scale * x.x1, scale * x.x2, 0.0};
    }
  }
  return {0.0, 0.0, 0.0};
}

void LatticeParams::validate() const {
  if (k < 1) throw std::invalid_argument("scale exponent k must be >= 1");
  if (eps <= 0) throw std::invalid_argument("disk radius eps must be positive");
  const Rat mesh(1, 1LL << k);
  if (!(mesh < eps / 4))
    throw std::invalid_argument("mesh too coarse: requires 2^-k < eps/4 (k=" + std::to_string(k) +
                                ", eps=" + rat_to_string(eps) + ")");
  if (!(R - eps > 16 * eps))
    throw std::invalid_argument("planar domain too small: requires R - eps > 16 eps");
  if (!(L > 16 * eps)) throw std::invalid_argument("rod domain too small: requires L > 16 eps");
}

}  // namespace vardim
