#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

// Exact formulas for the one-parameter family of solvable Lie groups G_alpha:
// group law on R^3, curvature data of the coordinate planes, the structure
// field driving the geodesic flow on the unit tangent sphere, and the
// conserved level function whose closed level sets carry the periods.

namespace solvegeo {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};
inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Family parameter, valid on [-1, 1]. alpha = 1 is Sol, alpha = 0 is H^2 x R,
// alpha = -1 is H^3. The loop/period machinery additionally needs alpha > 0.
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= -1.0 && value <= 1.0))
      throw std::domain_error("alpha must lie in [-1, 1]");
  }
  double value() const { return value_; }

  // Guard for operations defined only on the positive side of the family.
  void require_positive(const char* what) const {
    if (!(value_ > 0.0))
      throw std::domain_error(std::string(what) + " requires alpha in (0, 1]");
  }

 private:
  double value_;
};

// A point of G_alpha in the global coordinates (underlying set is R^3).
struct GroupPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

GroupPoint group_mul(const GroupPoint& p, const GroupPoint& q, Alpha alpha);
GroupPoint group_inv(const GroupPoint& p, Alpha alpha);

// Unit tangent direction in the left-invariant orthonormal frame {X, Y, Z}.
// Inputs must already be unit vectors up to 1e-6; anything farther off is a
// caller bug and is rejected rather than silently rescaled.
class SphereState {
 public:
  SphereState(double u1, double u2, double u3);
  explicit SphereState(const Vec3& v) : SphereState(v.x, v.y, v.z) {}

  double u1() const { return u_.x; }
  double u2() const { return u_.y; }
  double u3() const { return u_.z; }
  Vec3 vec() const { return u_; }

 private:
  Vec3 u_;
};

// Velocity of the geodesic-flow development on the unit sphere.
Vec3 structure_field(const Vec3& u, Alpha alpha);
inline Vec3 structure_field(const SphereState& s, Alpha alpha) {
  return structure_field(s.vec(), alpha);
}

// Conserved quantity |u1|^alpha * u2 of the sphere flow; defined as 0 on the
// plane u1 = 0 by continuous extension. Requires alpha > 0.
double level_value(const Vec3& u, Alpha alpha);
inline double level_value(const SphereState& s, Alpha alpha) {
  return level_value(s.vec(), alpha);
}

// Abscissa sqrt(alpha/(1+alpha)) of the flat equilibrium in the open sector;
// also the lower endpoint of the canonical x0 range.
double equilibrium_abscissa(Alpha alpha);

// Maximum of the level function over a sector, attained at the equilibrium.
double level_max(Alpha alpha);

struct CurvatureRow {
  double sectional, intrinsic, extrinsic, mean;
};
struct CurvatureTable {
  CurvatureRow xy, xz, yz;
};
CurvatureTable curvature_table(Alpha alpha);

double scalar_curvature(Alpha alpha);

}  // namespace solvegeo
