#include "solvegeo/algebra.hpp"

namespace solvegeo {

GroupPoint group_mul(const GroupPoint& p, const GroupPoint& q, Alpha alpha) {
  const double a = alpha.value();
  return {q.x * std::exp(p.z) + p.x, q.y * std::exp(-a * p.z) + p.y,
          q.z + p.z};
}

GroupPoint group_inv(const GroupPoint& p, Alpha alpha) {
  const double a = alpha.value();
  return {-p.x * std::exp(-p.z), -p.y * std::exp(a * p.z), -p.z};
}

SphereState::SphereState(double u1, double u2, double u3) : u_{u1, u2, u3} {
  const double n = u_.norm();
  if (!(n >= 1.0 - 1e-6 && n <= 1.0 + 1e-6))
    throw std::invalid_argument("SphereState: vector norm outside [1-1e-6, 1+1e-6]");
  u_.x /= n;
  u_.y /= n;
  u_.z /= n;
}

Vec3 structure_field(const Vec3& u, Alpha alpha) {
  const double a = alpha.value();
  return {u.x * u.z, -a * u.y * u.z, a * u.y * u.y - u.x * u.x};
}

double level_value(const Vec3& u, Alpha alpha) {
  alpha.require_positive("level_value");
  const double ax = std::abs(u.x);
  if (ax == 0.0) return 0.0;
  return std::pow(ax, alpha.value()) * u.y;
}

double equilibrium_abscissa(Alpha alpha) {
  alpha.require_positive("equilibrium_abscissa");
  const double a = alpha.value();
  return std::sqrt(a / (1.0 + a));
}

double level_max(Alpha alpha) {
  const double xe = equilibrium_abscissa(alpha);
  return std::pow(xe, alpha.value()) * std::sqrt(1.0 - xe * xe);
}

CurvatureTable curvature_table(Alpha alpha) {
  const double a = alpha.value();
  CurvatureTable t;
  t.xy = {a, 0.0, -a, (1.0 - a) / 2.0};
  t.xz = {-1.0, -1.0, 0.0, 0.0};
  t.yz = {-a * a, -a * a, 0.0, 0.0};
  return t;
}

double scalar_curvature(Alpha alpha) {
  const double a = alpha.value();
  return 2.0 * a - 2.0 - 2.0 * a * a;
}

}  // namespace solvegeo
