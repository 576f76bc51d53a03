#pragma once

#include <optional>

#include "solvegeo/algebra.hpp"
#include "solvegeo/ode.hpp"

// Numerical integration of the dynamical systems attached to G_alpha: the
// flow on the unit tangent sphere, the full geodesic flow (exponential map),
// the backward symmetric-flowline system carrying the endpoint coordinates
// (a, b), and its first-variation augmentation with respect to the initial
// abscissa x0. A concatenation-product evaluation of the exponential map is
// provided as an independent first-order oracle.

namespace solvegeo {

struct GeodesicState {
  GroupPoint pos;
  Vec3 dir;  // unit tangent in the left-invariant frame
};

// (x, y, z): point on the unit sphere moving backward along the structure
// field; (a, b): coordinates of the endpoint of the growing symmetric
// flowline's geodesic in the plane z = 0.
struct SymFlowState {
  double x, y, z, a, b;
};

struct VarFlowState {
  double x, y, z, a, b;
  double xbar, ybar, zbar, abar, bbar;  // d/dx0 of the five states
};

class SphereTrajectory {
 public:
  SphereTrajectory(Trajectory<3> t) : traj_(std::move(t)) {}
  Vec3 at(double t) const {
    auto y = traj_.at(t);
    return {y[0], y[1], y[2]};
  }
  double t_end() const { return traj_.t_end(); }
  const Trajectory<3>& raw() const { return traj_; }

 private:
  Trajectory<3> traj_;
};

class GeodesicTrajectory {
 public:
  GeodesicTrajectory(Trajectory<6> t) : traj_(std::move(t)) {}
  GeodesicState at(double t) const {
    auto y = traj_.at(t);
    return {{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
  }
  GroupPoint endpoint() const {
    const auto& y = traj_.final_state();
    return {y[0], y[1], y[2]};
  }
  double t_end() const { return traj_.t_end(); }
  const Trajectory<6>& raw() const { return traj_; }

 private:
  Trajectory<6> traj_;
};

class SymmetricTrajectory {
 public:
  SymmetricTrajectory(Trajectory<5> t, std::optional<double> rho)
      : traj_(std::move(t)), half_period_(rho) {}
  SymFlowState at(double t) const {
    auto y = traj_.at(t);
    return {y[0], y[1], y[2], y[3], y[4]};
  }
  // First return time of z to zero, when it lies inside the integrated span.
  std::optional<double> half_period() const { return half_period_; }
  double t_end() const { return traj_.t_end(); }
  const Trajectory<5>& raw() const { return traj_; }

 private:
  Trajectory<5> traj_;
  std::optional<double> half_period_;
};

class VariationalTrajectory {
 public:
  VariationalTrajectory(Trajectory<10> t, std::optional<double> rho)
      : traj_(std::move(t)), half_period_(rho) {}
  VarFlowState at(double t) const {
    auto y = traj_.at(t);
    return {y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7], y[8], y[9]};
  }
  std::optional<double> half_period() const { return half_period_; }
  double t_end() const { return traj_.t_end(); }
  const Trajectory<10>& raw() const { return traj_; }

 private:
  Trajectory<10> traj_;
  std::optional<double> half_period_;
};

SphereTrajectory flow_sphere(const SphereState& s0, double t_end, Alpha alpha,
                             const IntegratorConfig& cfg = {});

// Endpoint of the unit-speed geodesic from the identity with initial velocity
// v/|v|, run for time |v|.
GroupPoint exp_map(const Vec3& v, Alpha alpha, const IntegratorConfig& cfg = {});
GeodesicTrajectory exp_map_trajectory(const Vec3& v, Alpha alpha,
                                      const IntegratorConfig& cfg = {});

// Left-fold of the group product over n_steps+1 equally spaced samples of the
// sphere flow, each scaled by |v|/(n_steps+1). Converges to exp_map at first
// order in 1/n_steps.
GroupPoint exp_map_concat(const Vec3& v, long n_steps, Alpha alpha,
                          const IntegratorConfig& cfg = {});

// Backward flow from the equator point (x0, sqrt(1-x0^2), 0) together with
// the endpoint coordinates, from a(0) = b(0) = 0. Requires alpha in (0, 1]
// and x0 strictly between the equilibrium abscissa and 1.
SymmetricTrajectory flow_symmetric(double x0, double t_end, Alpha alpha,
                                   const IntegratorConfig& cfg = {});

// Same, but integrates just past the half period (extending the window as
// needed) so half_period() is always available.
SymmetricTrajectory flow_symmetric_half_period(double x0, Alpha alpha,
                                               const IntegratorConfig& cfg = {});

VariationalTrajectory flow_variational(double x0, double t_end, Alpha alpha,
                                       const IntegratorConfig& cfg = {});
VariationalTrajectory flow_variational_half_period(double x0, Alpha alpha,
                                                   const IntegratorConfig& cfg = {});

// Signed offset of the cylinder axis from the companion line for the geodesic
// launched at the identity with direction V_beta (positive z choice).
double companion_offset(double beta, Alpha alpha);

// Deviation of a geodesic state from the invariant cylinder of its loop level
// set, for the geodesic launched at the identity with direction V_beta:
//   (w - w_c)^2 + e^{2z} + (1/alpha) e^{-2 alpha z} - (1+alpha)/(alpha beta^2)
// with w = x - y sqrt(alpha) and w_c = companion_offset(beta, alpha).
double grayson_cylinder_residual(const GeodesicState& g, double beta,
                                 Alpha alpha);

// Top-of-loop unit vector V_beta with positive vertical component.
Vec3 loop_top_vector(double beta, Alpha alpha);

}  // namespace solvegeo
