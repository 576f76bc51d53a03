#include "solvegeo/flow.hpp"

#include <cmath>

namespace solvegeo {

namespace {

struct SphereRhs {
  double a;
  void operator()(double, const OdeState<3>& u, OdeState<3>& du) const {
    du[0] = u[0] * u[2];
    du[1] = -a * u[1] * u[2];
    du[2] = a * u[1] * u[1] - u[0] * u[0];
  }
};

struct GeodesicRhs {
  double a;
  void operator()(double, const OdeState<6>& s, OdeState<6>& ds) const {
    const double z = s[2];
    ds[0] = s[3] * std::exp(z);
    ds[1] = s[4] * std::exp(-a * z);
    ds[2] = s[5];
    ds[3] = s[3] * s[5];
    ds[4] = -a * s[4] * s[5];
    ds[5] = a * s[4] * s[4] - s[3] * s[3];
  }
};

struct SymmetricRhs {
  double a;
  void operator()(double, const OdeState<5>& s, OdeState<5>& ds) const {
    const double x = s[0], y = s[1], z = s[2];
    ds[0] = -x * z;
    ds[1] = a * y * z;
    ds[2] = x * x - a * y * y;
    ds[3] = 2.0 * x + s[3] * z;
    ds[4] = 2.0 * y - a * s[4] * z;
  }
};

struct VariationalRhs {
  double a;
  void operator()(double, const OdeState<10>& s, OdeState<10>& ds) const {
    const double x = s[0], y = s[1], z = s[2], av = s[3], bv = s[4];
    const double xb = s[5], yb = s[6], zb = s[7], ab = s[8], bb = s[9];
    ds[0] = -x * z;
    ds[1] = a * y * z;
    ds[2] = x * x - a * y * y;
    ds[3] = 2.0 * x + av * z;
    ds[4] = 2.0 * y - a * bv * z;
    ds[5] = -x * zb - z * xb;
    ds[6] = a * (y * zb + z * yb);
    ds[7] = 2.0 * x * xb - 2.0 * a * y * yb;
    ds[8] = 2.0 * xb + ab * z + av * zb;
    ds[9] = 2.0 * yb - a * (bb * z + bv * zb);
  }
};

void check_canonical_x0(double x0, Alpha alpha, const char* what) {
  alpha.require_positive(what);
  const double xe = equilibrium_abscissa(alpha);
  if (!(x0 > xe && x0 < 1.0))
    throw std::domain_error(std::string(what) +
                            ": x0 must lie strictly between the equilibrium "
                            "abscissa and 1");
}

// z starts at 0 and rises; the half period is its first downward crossing.
template <std::size_t N>
std::optional<double> locate_z_return(const Trajectory<N>& traj) {
  return traj.first_root_after(
      0.0, [](double t, const OdeState<N>& y) { return t > 0.0 ? y[2] : 1.0; });
}

}  // namespace

SphereTrajectory flow_sphere(const SphereState& s0, double t_end, Alpha alpha,
                             const IntegratorConfig& cfg) {
  OdeState<3> y0{s0.u1(), s0.u2(), s0.u3()};
  return SphereTrajectory(integrate<3>(SphereRhs{alpha.value()}, y0, 0.0, t_end, cfg));
}

GeodesicTrajectory exp_map_trajectory(const Vec3& v, Alpha alpha,
                                      const IntegratorConfig& cfg) {
  const double T = v.norm();
  if (!(T > 0.0)) throw std::domain_error("exp_map: zero vector");
  OdeState<6> y0{0.0, 0.0, 0.0, v.x / T, v.y / T, v.z / T};
  return GeodesicTrajectory(integrate<6>(GeodesicRhs{alpha.value()}, y0, 0.0, T, cfg));
}

GroupPoint exp_map(const Vec3& v, Alpha alpha, const IntegratorConfig& cfg) {
  IntegratorConfig c = cfg;
  c.dense_output = false;
  return exp_map_trajectory(v, alpha, c).endpoint();
}

GroupPoint exp_map_concat(const Vec3& v, long n_steps, Alpha alpha,
                          const IntegratorConfig& cfg) {
  if (n_steps < 1) throw std::domain_error("exp_map_concat: need n_steps >= 1");
  const double T = v.norm();
  if (!(T > 0.0)) throw std::domain_error("exp_map_concat: zero vector");
  SphereTrajectory traj =
      flow_sphere(SphereState(v.x / T, v.y / T, v.z / T), T, alpha, cfg);
  const double eps = T / static_cast<double>(n_steps + 1);
  GroupPoint g;
  for (long j = 0; j <= n_steps; ++j) {
    const double tj = T * static_cast<double>(j) / static_cast<double>(n_steps);
    const Vec3 u = traj.at(tj);
    g = group_mul(g, GroupPoint{eps * u.x, eps * u.y, eps * u.z}, alpha);
  }
  return g;
}

SymmetricTrajectory flow_symmetric(double x0, double t_end, Alpha alpha,
                                   const IntegratorConfig& cfg) {
  check_canonical_x0(x0, alpha, "flow_symmetric");
  OdeState<5> y0{x0, std::sqrt(1.0 - x0 * x0), 0.0, 0.0, 0.0};
  Trajectory<5> traj = integrate<5>(SymmetricRhs{alpha.value()}, y0, 0.0, t_end, cfg);
  auto rho = locate_z_return(traj);
  return SymmetricTrajectory(std::move(traj), rho);
}

SymmetricTrajectory flow_symmetric_half_period(double x0, Alpha alpha,
                                               const IntegratorConfig& cfg) {
  double window = 16.0;
  for (int tries = 0; tries < 12; ++tries) {
    SymmetricTrajectory traj = flow_symmetric(x0, window, alpha, cfg);
    if (traj.half_period()) return traj;
    window *= 2.0;
  }
  throw IntegratorFailure("flow_symmetric_half_period: no z return found", window);
}

VariationalTrajectory flow_variational(double x0, double t_end, Alpha alpha,
                                       const IntegratorConfig& cfg) {
  check_canonical_x0(x0, alpha, "flow_variational");
  const double y0v = std::sqrt(1.0 - x0 * x0);
  OdeState<10> y0{x0, y0v, 0.0, 0.0, 0.0, 1.0, -x0 / y0v, 0.0, 0.0, 0.0};
  Trajectory<10> traj =
      integrate<10>(VariationalRhs{alpha.value()}, y0, 0.0, t_end, cfg);
  auto rho = locate_z_return(traj);
  return VariationalTrajectory(std::move(traj), rho);
}

VariationalTrajectory flow_variational_half_period(double x0, Alpha alpha,
                                                   const IntegratorConfig& cfg) {
  double window = 16.0;
  for (int tries = 0; tries < 12; ++tries) {
    VariationalTrajectory traj = flow_variational(x0, window, alpha, cfg);
    if (traj.half_period()) return traj;
    window *= 2.0;
  }
  throw IntegratorFailure("flow_variational_half_period: no z return found", window);
}

Vec3 loop_top_vector(double beta, Alpha alpha) {
  alpha.require_positive("loop_top_vector");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("loop_top_vector: beta must lie in (0, 1]");
  const double a = alpha.value();
  return {beta * std::sqrt(a / (1.0 + a)), beta / std::sqrt(1.0 + a),
          std::sqrt(std::max(0.0, 1.0 - beta * beta))};
}

double companion_offset(double beta, Alpha alpha) {
  alpha.require_positive("companion_offset");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("companion_offset: beta must lie in (0, 1]");
  const double a = alpha.value();
  return std::sqrt((1.0 + a) / a) * std::sqrt(std::max(0.0, 1.0 - beta * beta)) / beta;
}

double grayson_cylinder_residual(const GeodesicState& g, double beta,
                                 Alpha alpha) {
  alpha.require_positive("grayson_cylinder_residual");
  const double a = alpha.value();
  const double w = g.pos.x - g.pos.y * std::sqrt(a);
  const double wc = companion_offset(beta, alpha);
  return (w - wc) * (w - wc) + std::exp(2.0 * g.pos.z) +
         std::exp(-2.0 * a * g.pos.z) / a - (1.0 + a) / (a * beta * beta);
}

}  // namespace solvegeo
