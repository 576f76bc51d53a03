#include "solvegeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "solvegeo/elliptic.hpp"

namespace solvegeo {

namespace {

constexpr double kPi = std::numbers::pi;

std::string loc(const char* k1, double v1, const char* k2 = nullptr,
                double v2 = 0.0) {
  std::ostringstream os;
  os.precision(10);
  os << k1 << "=" << v1;
  if (k2) os << ", " << k2 << "=" << v2;
  return os.str();
}

struct Case {
  double alpha, x0;
};

std::vector<Case> random_cases(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ua(0.1, 1.0);
  std::uniform_real_distribution<double> uf(0.05, 0.95);
  std::vector<Case> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double a = ua(rng);
    const double xe = equilibrium_abscissa(Alpha(a));
    out.push_back({a, xe + (1.0 - xe) * uf(rng)});
  }
  return out;
}

std::vector<double> loop_grid(Alpha alpha, int n) {
  const double xe = equilibrium_abscissa(alpha);
  return make_grid(xe, 1.0, n, 0.02 * (1.0 - xe));
}

}  // namespace

CheckReport check_level_conservation(int n_cases, double t_end, double tol,
                                     unsigned seed) {
  CheckReport rep;
  rep.name = "level_conservation";
  rep.grid = std::to_string(n_cases) + " random (alpha, x0) cases, t_end=" +
             std::to_string(t_end);
  double worst = 0.0;
  for (const Case& c : random_cases(n_cases, seed)) {
    const Alpha alpha(c.alpha);
    const double y0 = std::sqrt(1.0 - c.x0 * c.x0);
    const SphereState s0(c.x0, y0, 0.0);
    const double h0 = level_value(s0, alpha);
    SphereTrajectory traj = flow_sphere(s0, t_end, alpha);
    for (int i = 0; i <= 400; ++i) {
      const double t = t_end * i / 400.0;
      const double d = std::abs(level_value(traj.at(t), alpha) - h0);
      if (d > worst) {
        worst = d;
        rep.location = loc("alpha", c.alpha, "x0", c.x0);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max drift " + std::to_string(worst);
  return rep;
}

CheckReport check_cylinder_conservation(int n_cases, double length, double tol,
                                        unsigned seed) {
  CheckReport rep;
  rep.name = "cylinder_conservation";
  rep.grid = std::to_string(n_cases) + " random (alpha, x0) cases, length=" +
             std::to_string(length);
  double worst = 0.0;
  for (const Case& c : random_cases(n_cases, seed)) {
    const Alpha alpha(c.alpha);
    const double beta = beta_from_x0(c.x0, alpha);
    const Vec3 v = loop_top_vector(beta, alpha) * length;
    GeodesicTrajectory traj = exp_map_trajectory(v, alpha);
    for (int i = 0; i <= 300; ++i) {
      const double t = length * i / 300.0;
      const double r =
          std::abs(grayson_cylinder_residual(traj.at(t), beta, alpha));
      if (r > worst) {
        worst = r;
        rep.location = loc("alpha", c.alpha, "beta", beta);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max residual " + std::to_string(worst);
  return rep;
}

CheckReport check_symmetric_constraint(int n_cases, double tol, unsigned seed) {
  CheckReport rep;
  rep.name = "symmetric_flow_constraint";
  rep.grid = std::to_string(n_cases) + " random (alpha, x0) cases";
  double worst = 0.0;
  for (const Case& c : random_cases(n_cases, seed)) {
    const Alpha alpha(c.alpha);
    SymmetricTrajectory traj = flow_symmetric_half_period(c.x0, alpha);
    const double rho = *traj.half_period();
    for (int i = 0; i <= 300; ++i) {
      const SymFlowState s = traj.at(rho * i / 300.0);
      const double r =
          std::abs(s.a * s.x - c.alpha * s.b * s.y - 2.0 * s.z);
      if (r > worst) {
        worst = r;
        rep.location = loc("alpha", c.alpha, "x0", c.x0);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max residual " + std::to_string(worst);
  return rep;
}

CheckReport check_partner_grid(const std::vector<double>& alphas, int n_loops,
                               double tol) {
  CheckReport rep;
  rep.name = "perfect_partner_endpoints";
  rep.grid = std::to_string(alphas.size()) + " alphas x " +
             std::to_string(n_loops) + " loops";
  double worst = 0.0;
  for (double a : alphas) {
    const Alpha alpha(a);
    for (double x0 : loop_grid(alpha, n_loops)) {
      const double d = check_partner_identification(x0, alpha).distance;
      if (d > worst) {
        worst = d;
        rep.location = loc("alpha", a, "x0", x0);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max endpoint distance " + std::to_string(worst);
  return rep;
}

CheckReport check_reciprocity_grid(const std::vector<double>& alphas,
                                   int n_loops, double tol) {
  CheckReport rep;
  rep.name = "reciprocity_residual";
  rep.grid = std::to_string(alphas.size()) + " alphas x " +
             std::to_string(n_loops) + " loops";
  double worst = 0.0;
  bool mu_ok = true;
  for (double a : alphas) {
    const Alpha alpha(a);
    for (double x0 : loop_grid(alpha, n_loops)) {
      const ReciprocityCheck rc = check_reciprocity(x0, alpha);
      if (rc.residual > worst) {
        worst = rc.residual;
        rep.location = loc("alpha", a, "x0", x0);
      }
      if (!(rc.mu != 0.0) || !std::isfinite(rc.mu)) mu_ok = false;
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol && mu_ok;
  rep.detail = "max residual " + std::to_string(worst);
  return rep;
}

CheckReport check_endpoint_power_symmetry(const std::vector<double>& alphas,
                                          int n_loops, double tol) {
  CheckReport rep;
  rep.name = "endpoint_power_symmetry_as_stated";
  rep.grid = std::to_string(alphas.size()) + " alphas x " +
             std::to_string(n_loops) + " loops";
  double worst = 0.0;
  for (double a : alphas) {
    const Alpha alpha(a);
    for (double x0 : loop_grid(alpha, n_loops)) {
      SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
      const SymFlowState s = traj.at(*traj.half_period());
      const double d1 = std::abs(std::pow(x0, a) - s.y);
      const double d2 =
          std::abs(std::sqrt(1.0 - x0 * x0) - std::pow(s.x, a));
      const double d = std::max(d1, d2);
      if (d > worst) {
        worst = d;
        rep.location = loc("alpha", a, "x0", x0);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail =
      "max deviation " + std::to_string(worst) +
      " (identity is exact only at alpha=1; see endpoint_level_match)";
  return rep;
}

CheckReport check_endpoint_level_match(const std::vector<double>& alphas,
                                       int n_loops, double tol) {
  CheckReport rep;
  rep.name = "endpoint_level_match";
  rep.grid = std::to_string(alphas.size()) + " alphas x " +
             std::to_string(n_loops) + " loops";
  double worst = 0.0;
  for (double a : alphas) {
    const Alpha alpha(a);
    for (double x0 : loop_grid(alpha, n_loops)) {
      SymmetricTrajectory traj = flow_symmetric_half_period(x0, alpha);
      const SymFlowState s = traj.at(*traj.half_period());
      const double lvl0 =
          std::pow(x0, a) * std::sqrt(1.0 - x0 * x0);
      double d = std::abs(std::pow(s.x, a) * s.y - lvl0);
      // the crossing must be the low-side root and sit on the unit circle
      d = std::max(d, std::abs(s.x * s.x + s.y * s.y - 1.0));
      if (!(s.x < equilibrium_abscissa(alpha))) d = std::max(d, 1.0);
      if (d > worst) {
        worst = d;
        rep.location = loc("alpha", a, "x0", x0);
      }
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max deviation " + std::to_string(worst);
  return rep;
}

CheckReport check_dn_closed_form(int n_x0, double tol_y, double tol_p) {
  CheckReport rep;
  rep.name = "dn_closed_form";
  rep.grid = std::to_string(n_x0) + " x0 values, alpha=0.5";
  const Alpha half(0.5);
  double worst_y = 0.0, worst_p = 0.0;
  for (double x0 : loop_grid(half, n_x0)) {
    const HalfPeriodClosedForm cf = half_period_closed_form(x0);
    SymmetricTrajectory traj = flow_symmetric_half_period(x0, half);
    const double rho = *traj.half_period();
    for (int i = 0; i <= 200; ++i) {
      const double t = rho * i / 200.0;
      const SymFlowState s = traj.at(t);
      const double d =
          std::abs(s.y * s.y - y_squared_closed_form(t, cf));
      if (d > worst_y) {
        worst_y = d;
        rep.location = loc("x0", x0, "t", t);
      }
    }
    const double dp = std::abs(period_half(x0) -
                               period_quadrature(beta_from_x0(x0, half), half));
    worst_p = std::max(worst_p, dp);
  }
  rep.worst_margin = std::min(tol_y - worst_y, tol_p - worst_p);
  rep.pass = worst_y < tol_y && worst_p < tol_p;
  rep.detail = "max y^2 deviation " + std::to_string(worst_y) +
               ", max period deviation " + std::to_string(worst_p);
  return rep;
}

CheckReport check_closed_form_periods(int n_beta, double tol) {
  CheckReport rep;
  rep.name = "closed_form_periods";
  rep.grid = std::to_string(n_beta) + " beta values in [0.05, 0.995]";
  double worst = 0.0;
  const Alpha one(1.0), half(0.5);
  for (double beta : make_grid(0.05, 0.995, n_beta, 0.0)) {
    const double q1 = period_quadrature(beta, one);
    const double d1 = std::abs(period_sol(beta) - q1);
    const double qh = period_quadrature(beta, half);
    const double dh1 = std::abs(period_half_from_endpoints(beta) - qh);
    const double dh2 = std::abs(period_half(x0_from_beta(beta, half)) - qh);
    const double d = std::max({d1, dh1, dh2});
    if (d > worst) {
      worst = d;
      rep.location = loc("beta", beta);
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max closed-form vs quadrature deviation " + std::to_string(worst);
  return rep;
}

CheckReport check_variational_fd(const std::vector<double>& x0s, double h,
                                 double rel_tol) {
  CheckReport rep;
  rep.name = "variational_finite_difference";
  rep.grid = std::to_string(x0s.size()) + " x0 values, alpha=0.5, h=" +
             std::to_string(h);
  const Alpha half(0.5);
  double worst = 0.0;
  for (double x0 : x0s) {
    VariationalTrajectory traj = flow_variational_half_period(x0, half);
    const double rho = *traj.half_period();
    const VarFlowState s = traj.at(rho);
    SymmetricTrajectory tp = flow_symmetric(x0 + h, rho * 1.01, half);
    SymmetricTrajectory tm = flow_symmetric(x0 - h, rho * 1.01, half);
    const SymFlowState sp = tp.at(rho), sm = tm.at(rho);
    const double bars[5] = {s.xbar, s.ybar, s.zbar, s.abar, s.bbar};
    const double fds[5] = {(sp.x - sm.x) / (2 * h), (sp.y - sm.y) / (2 * h),
                           (sp.z - sm.z) / (2 * h), (sp.a - sm.a) / (2 * h),
                           (sp.b - sm.b) / (2 * h)};
    for (int i = 0; i < 5; ++i) {
      const double r = std::abs(fds[i] - bars[i]) / std::max(1.0, std::abs(bars[i]));
      if (r > worst) {
        worst = r;
        rep.location = loc("x0", x0, "component", i);
      }
    }
  }
  rep.worst_margin = rel_tol - worst;
  rep.pass = worst < rel_tol;
  rep.detail = "max relative deviation " + std::to_string(worst);
  return rep;
}

CheckReport check_time_shift_grid(const std::vector<double>& x0s, double tol) {
  CheckReport rep;
  rep.name = "half_period_time_shift";
  rep.grid = std::to_string(x0s.size()) + " x0 values, alpha=0.5";
  double worst = 0.0;
  bool signs = true;
  for (double x0 : x0s) {
    const HalfPeriodShiftCheck c = check_half_period_time_shift(x0);
    if (std::abs(c.residual) > worst) {
      worst = std::abs(c.residual);
      rep.location = loc("x0", x0);
    }
    if (!(c.zbar > 0.0) || !(c.zprime < 0.0)) signs = false;
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol && signs;
  rep.detail = "max residual " + std::to_string(worst);
  return rep;
}

CheckReport check_half_period_bar_values(const std::vector<double>& x0s,
                                         double tol) {
  CheckReport rep;
  rep.name = "half_period_bar_values_as_stated";
  rep.grid = std::to_string(x0s.size()) + " x0 values, alpha=0.5";
  const Alpha half(0.5);
  double worst = 0.0;
  for (double x0 : x0s) {
    VariationalTrajectory traj = flow_variational_half_period(x0, half);
    const VarFlowState s = traj.at(*traj.half_period());
    const double dy = std::abs(s.ybar - 0.5 / std::sqrt(x0));
    const double dx = std::abs(s.xbar - (-2.0 * x0));
    const double d = std::max(dx, dy);
    if (d > worst) {
      worst = d;
      rep.location = loc("x0", x0);
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail =
      "max deviation " + std::to_string(worst) +
      " (values are exact only in the Sol limit; see the level-matched check)";
  return rep;
}

CheckReport check_half_period_bar_values_level_matched(
    const std::vector<double>& x0s, double tol) {
  CheckReport rep;
  rep.name = "half_period_bar_values_level_matched";
  rep.grid = std::to_string(x0s.size()) + " x0 values, alpha=0.5";
  const Alpha half(0.5);
  double worst = 0.0;
  for (double x0 : x0s) {
    VariationalTrajectory traj = flow_variational_half_period(x0, half);
    const VarFlowState s = traj.at(*traj.half_period());
    // the crossing is x1 = (sqrt(4-3x0^2)-x0)/2, y1 = sqrt(1-x1^2); the bars
    // at the half period are their total x0-derivatives since x' = y' = 0
    const double r = std::sqrt(4.0 - 3.0 * x0 * x0);
    const double x1 = 0.5 * (r - x0);
    const double dx1 = 0.5 * (-3.0 * x0 / r - 1.0);
    const double y1 = std::sqrt(1.0 - x1 * x1);
    const double dy1 = -x1 * dx1 / y1;
    const double d =
        std::max(std::abs(s.xbar - dx1), std::abs(s.ybar - dy1));
    if (d > worst) {
      worst = d;
      rep.location = loc("x0", x0);
    }
  }
  rep.worst_margin = tol - worst;
  rep.pass = worst < tol;
  rep.detail = "max deviation " + std::to_string(worst);
  return rep;
}

CheckReport check_holonomy_monotone(Alpha alpha, int n_loops) {
  CheckReport rep;
  rep.name = "holonomy_monotone_in_period";
  rep.grid = loc("alpha", alpha.value()) + ", " + std::to_string(n_loops) +
             " loops";
  std::vector<std::pair<double, double>> ph;
  for (double x0 : loop_grid(alpha, n_loops)) {
    const LoopSpec loop = make_loop_from_x0(x0, alpha);
    ph.emplace_back(loop.period, loop.holonomy);
  }
  std::sort(ph.begin(), ph.end());
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < ph.size(); ++i) {
    const double slope =
        (ph[i].second - ph[i - 1].second) / (ph[i].first - ph[i - 1].first);
    if (slope < worst) {
      worst = slope;
      rep.location = loc("P", ph[i].first);
    }
  }
  rep.worst_margin = worst;
  rep.pass = worst > 0.0;
  rep.detail = "min dH/dP slope " + std::to_string(worst);
  return rep;
}

CheckReport check_period_monotone_beta(Alpha alpha, int n_beta) {
  CheckReport rep;
  const double a = alpha.value();
  rep.name = "period_decreasing_in_beta";
  rep.grid = loc("alpha", a) + ", " + std::to_string(n_beta) + " beta values";
  rep.exploratory = !(a == 1.0 || a == 0.5);
  double prev = std::numeric_limits<double>::infinity();
  double worst = std::numeric_limits<double>::infinity();
  for (double beta : make_grid(0.02, 0.999, n_beta, 0.0)) {
    const double p = period_quadrature(beta, alpha);
    if (prev - p < worst) {
      worst = prev - p;
      rep.location = loc("beta", beta);
    }
    prev = p;
  }
  rep.worst_margin = worst;
  rep.pass = worst > 0.0;
  return rep;
}

CheckReport check_period_table(double tol_abs) {
  CheckReport rep;
  rep.name = "period_table";
  rep.grid = "alpha = 0.1 .. 1.0, beta = 0.999";
  static const double kTable[10] = {14.0792, 9.94735, 8.11985, 7.03114,
                                    6.28842, 5.7403,  5.31436, 4.97106,
                                    4.68673, 4.44622};
  double worst = 0.0;
  bool exceeds = true;
  for (int i = 0; i < 10; ++i) {
    const double a = 0.1 * (i + 1);
    const double p = period_quadrature(0.999, Alpha(a));
    const double d = std::abs(p - kTable[i]);
    if (d > worst) {
      worst = d;
      rep.location = loc("alpha", a);
    }
    if (!(p > kPi * std::sqrt(2.0 / a))) exceeds = false;
  }
  rep.worst_margin = tol_abs - worst;
  rep.pass = worst < tol_abs && exceeds;
  rep.detail = "max |P - table| = " + std::to_string(worst);
  return rep;
}

std::vector<CheckReport> run_verification(const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  const double e = opts.effort;
  const int n_cases = std::max(4, static_cast<int>(20 * e));
  const bool want_half = !opts.alpha || *opts.alpha == 0.5;
  const bool want_one = !opts.alpha || *opts.alpha == 1.0;

  out.push_back(check_level_conservation(n_cases, 20.0, 1e-9, opts.seed));
  out.push_back(check_cylinder_conservation(n_cases, 30.0, 1e-7, opts.seed + 1));
  out.push_back(check_symmetric_constraint(n_cases, 1e-8, opts.seed + 2));

  std::vector<double> alphas;
  if (opts.alpha)
    alphas = {*opts.alpha};
  else
    alphas = {1.0, 0.75, 0.5};
  out.push_back(check_partner_grid(alphas, 10, 1e-6));
  out.push_back(check_reciprocity_grid(alphas, 10, 1e-7));
  out.push_back(check_endpoint_power_symmetry(alphas, 10, 1e-8));
  out.push_back(check_endpoint_level_match(alphas, 10, 1e-8));

  out.push_back(check_period_table(5e-3));
  out.push_back(
      check_closed_form_periods(std::max(10, static_cast<int>(100 * e)), 1e-8));

  if (want_one) out.push_back(check_period_monotone_beta(Alpha(1.0), 200));
  if (want_half) {
    out.push_back(check_period_monotone_beta(Alpha(0.5), 200));
    const auto xs = make_grid(1.0 / std::sqrt(3.0), 1.0,
                              std::max(8, static_cast<int>(20 * e)), 1e-3);
    out.push_back(check_dn_closed_form(std::max(8, static_cast<int>(20 * e)),
                                       1e-7, 1e-8));
    out.push_back(check_variational_fd(xs, 1e-5, 1e-4));
    out.push_back(check_time_shift_grid(xs, 1e-6));
    out.push_back(check_half_period_bar_values(xs, 1e-6));
    out.push_back(check_half_period_bar_values_level_matched(xs, 1e-6));
    out.push_back(check_boundary_monotonicity(
        make_grid(1.0 / std::sqrt(3.0), 1.0,
                  std::max(25, static_cast<int>(100 * e)), 1e-4)));
    out.push_back(check_g_negative(
        make_grid(1.0 / std::sqrt(3.0), 1.0,
                  std::max(100, static_cast<int>(10000 * e)), 1e-6)));
    out.push_back(check_monotonicity_certificate(
        make_grid(1.0 / std::sqrt(3.0), 1.0,
                  std::max(100, static_cast<int>(10000 * e)), 1e-6)));
    out.push_back(check_holonomy_monotone(Alpha(0.5), 12));
  }
  for (double a : alphas) {
    CheckReport bb = check_bounding_box(
        Alpha(a), loop_grid(Alpha(a), std::max(5, static_cast<int>(20 * e))),
        std::max(50, static_cast<int>(300 * e)));
    out.push_back(bb);
  }

  // exploratory probes, never gates
  if (!opts.alpha) {
    for (double a : {0.2, 0.35, 0.65, 0.9})
      out.push_back(check_period_monotone_beta(Alpha(a), 60));
    for (const BLimitEstimate& bl : explore_b_limit({1.0, 0.5, 0.25})) {
      CheckReport rep;
      rep.name = "exploratory_boundary_height_limit";
      rep.grid = loc("alpha", bl.alpha);
      rep.exploratory = true;
      rep.pass = true;
      rep.worst_margin = std::abs(bl.estimate - bl.conjectured);
      rep.detail = "estimate " + std::to_string(bl.estimate) + " vs 2/alpha " +
                   std::to_string(bl.conjectured) +
                   (bl.stable ? "" : " (extrapolation unstable)");
      out.push_back(rep);
    }
  }
  return out;
}

}  // namespace solvegeo
