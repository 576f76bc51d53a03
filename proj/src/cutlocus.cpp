#include "solvegeo/cutlocus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "solvegeo/elliptic.hpp"

namespace solvegeo {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_loc(const char* k1, double v1, const char* k2 = nullptr,
                    double v2 = 0.0, const char* k3 = nullptr, double v3 = 0.0) {
  std::ostringstream os;
  os.precision(10);
  os << k1 << "=" << v1;
  if (k2) os << ", " << k2 << "=" << v2;
  if (k3) os << ", " << k3 << "=" << v3;
  return os.str();
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, int n, double inset) {
  std::vector<double> g(n);
  const double a = lo + inset, b = hi - inset;
  for (int i = 0; i < n; ++i)
    g[i] = (n == 1) ? 0.5 * (a + b)
                    : a + (b - a) * static_cast<double>(i) / (n - 1);
  return g;
}

SegmentClass classify(const Vec3& v, Alpha alpha, double tol) {
  alpha.require_positive("classify");
  const double T = v.norm();
  if (!(T > 0.0)) throw std::domain_error("classify: zero vector");
  const double u1 = std::abs(v.x) / T, u2 = std::abs(v.y) / T;
  const double c = (u1 == 0.0) ? 0.0 : std::pow(u1, alpha.value()) * u2;
  const double cmax = level_max(alpha);
  SegmentClass out;
  if (!(c > cmax * 1e-14) || !(c < cmax * (1.0 - 1e-14))) {
    out.kind = SegmentKind::Unclassifiable;
    return out;
  }
  const double x0 = x0_from_level(c, alpha);
  const double beta = beta_from_x0(x0, alpha);
  out.period = period_quadrature(beta, alpha);
  out.slack = T - out.period;
  const double band = tol * std::max(1.0, out.period);
  if (std::abs(out.slack) <= band)
    out.kind = SegmentKind::Perfect;
  else
    out.kind = out.slack < 0.0 ? SegmentKind::Small : SegmentKind::Large;
  return out;
}

std::vector<PlaneCurveSample> lambda_curve(double x0, Alpha alpha,
                                           int n_samples) {
  if (n_samples < 1) throw std::domain_error("lambda_curve: need n_samples >= 1");
  SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
  const double rho = *traj.half_period();
  const double a = alpha.value();
  std::vector<PlaneCurveSample> out;
  out.reserve(n_samples);
  for (int i = 1; i <= n_samples; ++i) {
    const double t = rho * static_cast<double>(i) / n_samples;
    const SymFlowState s = traj.at(t);
    out.push_back({t, s.a, s.b, 2.0 * s.x + s.a * s.z,
                   2.0 * s.y - a * s.b * s.z});
  }
  return out;
}

namespace {

double dperiod_general(double x0, Alpha alpha) {
  if (alpha.value() == 0.5) return dperiod_dx0(x0);
  const double h = 1e-6 * std::min(x0 - equilibrium_abscissa(alpha), 1.0 - x0);
  const double pp = period_quadrature(beta_from_x0(x0 + h, alpha), alpha);
  const double pm = period_quadrature(beta_from_x0(x0 - h, alpha), alpha);
  return (pp - pm) / (2.0 * h);
}

}  // namespace

std::vector<BoundaryPoint> boundary_curve(Alpha alpha,
                                          const std::vector<double>& x0_grid) {
  alpha.require_positive("boundary_curve");
  std::vector<BoundaryPoint> out;
  out.reserve(x0_grid.size());
  for (double x0 : x0_grid) {
    VariationalTrajectory traj = flow_variational_half_period(x0, alpha);
    const double rho = *traj.half_period();
    const VarFlowState s = traj.at(rho);
    const double dP = dperiod_general(x0, alpha);
    BoundaryPoint bp;
    bp.x0 = x0;
    bp.a_end = s.a;
    bp.b_end = s.b;
    // chain rule through the moving half period; a' = 2x and b' = 2y there
    bp.da_dx0 = s.abar + 0.5 * dP * 2.0 * s.x;
    bp.db_dx0 = s.bbar + 0.5 * dP * 2.0 * s.y;
    out.push_back(bp);
  }
  return out;
}

CheckReport check_bounding_box(Alpha alpha, const std::vector<double>& x0_grid,
                               int n_t_samples) {
  CheckReport rep;
  rep.name = "bounding_box_derivatives";
  rep.grid = fmt_loc("alpha", alpha.value()) + ", " +
             std::to_string(x0_grid.size()) + " x0 values, " +
             std::to_string(n_t_samples) + " t samples";
  double worst = std::numeric_limits<double>::infinity();
  const double a = alpha.value();
  for (double x0 : x0_grid) {
    SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
    const double rho = *traj.half_period();
    for (int i = 1; i < n_t_samples; ++i) {
      const double t = rho * static_cast<double>(i) / n_t_samples;
      const SymFlowState s = traj.at(t);
      const double ap = 2.0 * s.x + s.a * s.z;
      const double bp = 2.0 * s.y - a * s.b * s.z;
      const double m = std::min(ap, bp);
      if (m < worst) {
        worst = m;
        rep.location = fmt_loc("alpha", a, "x0", x0, "t", t);
      }
    }
  }
  rep.worst_margin = worst;
  rep.pass = worst > 0.0;
  return rep;
}

std::vector<std::pair<double, double>> bprime_trace(Alpha alpha, double x0,
                                                    double halfperiods, int n) {
  SymmetricTrajectory probe = flow_symmetric_half_period(x0, alpha);
  const double rho = *probe.half_period();
  SymmetricTrajectory traj = flow_symmetric(x0, rho * halfperiods, alpha);
  const double a = alpha.value();
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const double t = rho * halfperiods * static_cast<double>(i) / n;
    const SymFlowState s = traj.at(t);
    out.emplace_back(t, 2.0 * s.y - a * s.b * s.z);
  }
  return out;
}

ReciprocityCheck check_reciprocity(double x0, Alpha alpha) {
  SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
  const SymFlowState s = traj.at(*traj.half_period());
  ReciprocityCheck out;
  out.residual = std::abs(s.a * s.x - alpha.value() * s.b * s.y);
  out.mu = s.a / (alpha.value() * s.y);
  return out;
}

PartnerCheck check_partner_identification(double x0, Alpha alpha) {
  SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
  const double rho = *traj.half_period();
  const double P = 2.0 * rho;
  const SymFlowState mid = traj.at(0.5 * rho);
  PartnerCheck out;
  out.plus = exp_map({P * mid.x, P * mid.y, P * mid.z}, alpha);
  out.minus = exp_map({P * mid.x, P * mid.y, -P * mid.z}, alpha);
  const double dx = out.plus.x - out.minus.x, dy = out.plus.y - out.minus.y,
               dz = out.plus.z - out.minus.z;
  out.distance = std::sqrt(dx * dx + dy * dy + dz * dz);
  return out;
}

double g_function(double x0) {
  return dperiod_dx0(x0) -
         kPi * (0.5 / std::sqrt(x0) + 2.0 * x0 * std::sqrt(x0) / (1.0 - x0 * x0));
}

CheckReport check_g_negative(const std::vector<double>& x0_grid) {
  CheckReport rep;
  rep.name = "period_slope_gap_negative";
  rep.grid = std::to_string(x0_grid.size()) + " x0 values in (1/sqrt(3), 1)";
  double worst = -std::numeric_limits<double>::infinity();
  for (double x0 : x0_grid) {
    const double g = g_function(x0);
    if (g > worst) {
      worst = g;
      rep.location = fmt_loc("x0", x0);
    }
  }
  rep.worst_margin = -worst;
  rep.pass = worst < 0.0;
  return rep;
}

double monotonicity_certificate_ratio(double x0d) {
  if (!(x0d > 1.0 / std::sqrt(3.0) && x0d < 1.0))
    throw std::domain_error(
        "monotonicity_certificate_ratio: x0 must lie in (1/sqrt(3), 1)");
  // evaluated in extended precision: the numerator cancels badly near x0 -> 1
  const long double x = x0d;
  const long double x2 = x * x;
  const long double r = sqrtl(4.0L - 3.0L * x2);
  const long double q = sqrtl(r);  // (4 - 3 x^2)^{1/4}
  const long double x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x4 * x2,
                    x7 = x6 * x, x8 = x4 * x4;
  const long double num1 =
      27.0L * x6 - 36.0L * x4 - 3.0L * x2 + 8.0L * q + 4.0L;
  const long double num2 = -3.0L * x2 + r * x + 2.0L;
  const long double den =
      -27.0L * x8 + 72.0L * x6 - 57.0L * x4 + 12.0L * x2 + 6.0L * r * x -
      9.0L * r * x7 + 18.0L * r * x5 - 17.0L * r * x3 + 2.0L;
  const long double value =
      num1 * num1 * num2 * num2 * num2 * num2 / (64.0L * r * den * den);
  return static_cast<double>(value);
}

CheckReport check_monotonicity_certificate(const std::vector<double>& x0_grid) {
  CheckReport rep;
  rep.name = "monotonicity_certificate_below_one";
  rep.grid = std::to_string(x0_grid.size()) + " x0 values in (1/sqrt(3), 1)";
  double worst = -std::numeric_limits<double>::infinity();
  for (double x0 : x0_grid) {
    const double v = monotonicity_certificate_ratio(x0);
    if (v > worst) {
      worst = v;
      rep.location = fmt_loc("x0", x0);
    }
  }
  rep.worst_margin = 1.0 - worst;
  rep.pass = worst < 1.0;
  return rep;
}

CheckReport check_boundary_monotonicity(const std::vector<double>& x0_grid,
                                        double db_slack, double b_floor_slack) {
  CheckReport rep;
  rep.name = "boundary_curve_monotonicity";
  rep.grid = std::to_string(x0_grid.size()) + " x0 values, alpha=0.5";
  const auto pts = boundary_curve(Alpha(0.5), x0_grid);
  double worst = std::numeric_limits<double>::infinity();
  bool pass = true;
  for (const auto& p : pts) {
    if (!(p.da_dx0 > 0.0)) {
      pass = false;
      rep.location = fmt_loc("x0", p.x0) + " (da/dx0)";
    }
    if (!(p.db_dx0 <= db_slack)) {
      pass = false;
      rep.location = fmt_loc("x0", p.x0) + " (db/dx0)";
    }
    const double floor_margin = p.b_end - (4.0 - b_floor_slack);
    if (floor_margin < worst) {
      worst = floor_margin;
      if (pass) rep.location = fmt_loc("x0", p.x0);
    }
    if (!(floor_margin >= 0.0)) pass = false;
  }
  rep.worst_margin = worst;
  rep.pass = pass;
  return rep;
}

HalfPeriodShiftCheck check_half_period_time_shift(double x0) {
  VariationalTrajectory traj = flow_variational_half_period(x0, Alpha(0.5));
  const double rho = *traj.half_period();
  const VarFlowState s = traj.at(rho);
  HalfPeriodShiftCheck out;
  out.zprime = s.x * s.x - 0.5 * s.y * s.y;
  out.zbar = s.zbar;
  out.residual = s.zbar + 0.5 * dperiod_dx0(x0) * out.zprime;
  return out;
}

std::vector<BLimitEstimate> explore_b_limit(const std::vector<double>& alphas) {
  std::vector<BLimitEstimate> out;
  for (double a : alphas) {
    const Alpha alpha(a);
    double b[3];
    const double xs[3] = {0.99, 0.999, 0.9999};
    for (int i = 0; i < 3; ++i) {
      SymmetricTrajectory traj = flow_symmetric_half_period(xs[i], alpha);
      b[i] = traj.at(*traj.half_period()).b;
    }
    BLimitEstimate e;
    e.alpha = a;
    e.conjectured = 2.0 / a;
    const double d1 = b[0] - b[1], d2 = b[1] - b[2];
    if (d1 * d2 > 0.0) {
      e.rate = std::log(d1 / d2) / std::log(10.0);
      e.estimate = b[2] - d2 / (std::pow(10.0, e.rate) - 1.0);
      e.stable = e.rate > 0.2 && e.rate < 4.0;
    } else {
      e.rate = 0.0;
      e.estimate = b[2];
      e.stable = false;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace solvegeo
