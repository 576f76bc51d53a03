#include "solvegeo/period.hpp"

#include <cmath>
#include <numbers>

#include "solvegeo/elliptic.hpp"
#include "solvegeo/quadrature.hpp"

namespace solvegeo {

namespace {

constexpr double kPi = std::numbers::pi;

void check_beta_open(double beta, const char* what) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::domain_error(std::string(what) + ": beta must lie in (0, 1)");
}

// Safeguarded Newton for a strictly increasing f on (0, hi].
template <class F, class DF>
double newton_increasing(F f, DF df, double lo, double hi) {
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double v = f(t);
    if (v > 0.0)
      hi = t;
    else
      lo = t;
    const double d = df(t);
    double tn = (d > 0.0) ? t - v / d : 0.5 * (lo + hi);
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    if (std::abs(tn - t) <= 1e-16 * std::max(1.0, std::abs(t))) return tn;
    t = tn;
  }
  return t;
}

}  // namespace

EndpointTimes endpoint_times(double beta, Alpha alpha) {
  alpha.require_positive("endpoint_times");
  check_beta_open(beta, "endpoint_times");
  const double a = alpha.value();
  const double R = (a + 1.0) / (beta * beta);

  const double hi0 = 0.5 * std::log(R / a) + 1.0;
  const double t0 = newton_increasing(
      [&](double t) { return a * std::exp(2.0 * t) + std::exp(-2.0 * a * t) - R; },
      [&](double t) { return 2.0 * a * (std::exp(2.0 * t) - std::exp(-2.0 * a * t)); },
      0.0, hi0);

  const double hi1 = 0.5 * std::log(R) / a + 1.0;
  const double t1 = newton_increasing(
      [&](double t) { return a * std::exp(-2.0 * t) + std::exp(2.0 * a * t) - R; },
      [&](double t) { return 2.0 * a * (std::exp(2.0 * a * t) - std::exp(-2.0 * t)); },
      0.0, hi1);

  return {t0, t1};
}

EndpointTimes endpoint_times_cardano_half(double beta) {
  check_beta_open(beta, "endpoint_times_cardano_half");
  // e^{t0} and e^{-t1} are the two positive roots of u^3 - (3/beta^2) u + 2
  const double theta = std::acos(-beta * beta * beta);
  const double u0 = 2.0 / beta * std::cos(theta / 3.0);
  const double u1 = 2.0 / beta * std::cos(theta / 3.0 - 2.0 * kPi / 3.0);
  return {std::log(u0), -std::log(u1)};
}

double period_quadrature(double beta, Alpha alpha) {
  alpha.require_positive("period_quadrature");
  check_beta_open(beta, "period_quadrature");
  const double a = alpha.value();
  const auto [t0, t1] = endpoint_times(beta, alpha);
  const double k = beta * beta / (a + 1.0);

  // The radicand has simple zeros at the ends; with t = -t1 + s^2 (left half)
  // and t = t0 - s^2 (right half) the integrand becomes analytic in s. The
  // factored radicand F(t)/delta is evaluated with expm1 against the exact
  // root condition, so no cancellation occurs near the ends.
  const double e2t1 = std::exp(-2.0 * t1), e2at1 = std::exp(2.0 * a * t1);
  const double e2t0 = std::exp(2.0 * t0), e2at0 = std::exp(-2.0 * a * t0);

  auto qleft = [&](double s) {
    const double d = s * s;
    const double q =
        (d == 0.0)
            ? 2.0 * a * (e2t1 - e2at1)
            : (a * e2t1 * std::expm1(2.0 * d) + e2at1 * std::expm1(-2.0 * a * d)) / d;
    return 4.0 / std::sqrt(-k * q);
  };
  auto qright = [&](double s) {
    const double d = s * s;
    const double q =
        (d == 0.0)
            ? -2.0 * a * (e2t0 - e2at0)
            : (a * e2t0 * std::expm1(-2.0 * d) + e2at0 * std::expm1(2.0 * a * d)) / d;
    return 4.0 / std::sqrt(-k * q);
  };

  const double split = 0.5 * (t0 - t1);  // interior point of (-t1, t0)
  const double sl = std::sqrt(split + t1);
  const double sr = std::sqrt(t0 - split);

  QuadResult left = integrate_gk(qleft, 0.0, sl, 1e-12, 1e-13);
  QuadResult right = integrate_gk(qright, 0.0, sr, 1e-12, 1e-13);
  if (!left.converged) left = integrate_tanh_sinh(qleft, 0.0, sl, 1e-12);
  if (!right.converged) right = integrate_tanh_sinh(qright, 0.0, sr, 1e-12);
  if (!left.converged || !right.converged)
    throw std::runtime_error("period_quadrature: quadrature did not converge");
  return left.value + right.value;
}

double period_sol(double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("period_sol: beta must lie in (0, 1]");
  const double b2 = beta * beta;
  return 4.0 / std::sqrt(1.0 + b2) * ellip_K((1.0 - b2) / (1.0 + b2));
}

namespace {

void check_half_x0(double x0, const char* what) {
  if (!(x0 > 1.0 / std::sqrt(3.0) && x0 < 1.0))
    throw std::domain_error(std::string(what) +
                            ": x0 must lie in (1/sqrt(3), 1)");
}

}  // namespace

HalfPeriodClosedForm half_period_closed_form(double x0) {
  check_half_x0(x0, "half_period_closed_form");
  const double D = std::sqrt(4.0 * x0 * x0 - 3.0 * x0 * x0 * x0 * x0);
  const double A = 2.0 - 3.0 * x0 * x0;
  HalfPeriodClosedForm cf;
  cf.nu1 = 0.5 * (x0 * x0 - D);
  cf.nu2 = 0.5 * (A + D);
  cf.nu3 = std::sqrt(A + D) / (2.0 * std::sqrt(2.0));
  cf.nu4 = (A - D) / (A + D);
  cf.sigma1 = 4.0 / std::sqrt(D);
  cf.sigma2 = (D - A) / (2.0 * D);
  return cf;
}

double y_squared_closed_form(double t, const HalfPeriodClosedForm& cf) {
  // dn(u, m)^2 with m = nu4 <= 0, through dn(u,m) = 1/dn(u sqrt(1-m), m/(m-1))
  double dnsq;
  if (cf.nu4 == 0.0) {
    dnsq = 1.0;
  } else {
    const double d =
        jacobi_dn(t * cf.nu3 * std::sqrt(1.0 - cf.nu4), cf.sigma2);
    dnsq = 1.0 / (d * d);
  }
  return cf.nu1 + cf.nu2 * dnsq;
}

double period_half(double x0) {
  const HalfPeriodClosedForm cf = half_period_closed_form(x0);
  return cf.sigma1 * ellip_K(cf.sigma2);
}

double period_half_from_endpoints(double beta) {
  check_beta_open(beta, "period_half_from_endpoints");
  const Alpha half(0.5);
  const auto [t0, t1] = endpoint_times(beta, half);
  const double den = std::exp(t0 - t1) + 2.0 * std::exp(t1);
  const double m = 2.0 * (std::exp(t1) - std::exp(-t0)) / den;
  return 4.0 * std::sqrt(3.0) / (beta * std::sqrt(den)) * ellip_K(m);
}

double beta_from_x0(double x0, Alpha alpha) {
  alpha.require_positive("beta_from_x0");
  const double a = alpha.value();
  const double xe = equilibrium_abscissa(alpha);
  if (!(x0 >= xe && x0 < 1.0))
    throw std::domain_error("beta_from_x0: x0 outside [equilibrium, 1)");
  // level of V_beta is beta^{1+alpha} * C(alpha); match it to the x0 level
  const double c = std::pow(x0, a) * std::sqrt(1.0 - x0 * x0);
  const double calpha = std::pow(a / (1.0 + a), 0.5 * a) / std::sqrt(1.0 + a);
  return std::pow(c / calpha, 1.0 / (1.0 + a));
}

double x0_from_level(double c, Alpha alpha) {
  alpha.require_positive("x0_from_level");
  const double a = alpha.value();
  const double cmax = level_max(alpha);
  if (!(c > 0.0 && c < cmax))
    throw std::domain_error("x0_from_level: level value is not on a loop");
  // The level x^alpha sqrt(1-x^2) decreases from cmax to 0 on the high side.
  double lo = equilibrium_abscissa(alpha), hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = std::pow(mid, a) * std::sqrt(1.0 - mid * mid);
    if (v > c)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  return 0.5 * (lo + hi);
}

double x0_from_beta(double beta, Alpha alpha) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::domain_error("x0_from_beta: beta must lie in (0, 1)");
  const double a = alpha.value();
  const double calpha = std::pow(a / (1.0 + a), 0.5 * a) / std::sqrt(1.0 + a);
  return x0_from_level(std::pow(beta, 1.0 + a) * calpha, alpha);
}

double dperiod_dx0(double x0) {
  check_half_x0(x0, "dperiod_dx0");
  const double D = std::sqrt(4.0 * x0 * x0 - 3.0 * x0 * x0 * x0 * x0);
  const double A = 2.0 - 3.0 * x0 * x0;
  const double Dp = (4.0 * x0 - 6.0 * x0 * x0 * x0) / D;
  const double s2 = (D - A) / (2.0 * D);
  const double s1 = 4.0 / std::sqrt(D);
  const double s1p = -2.0 * Dp / std::pow(D, 1.5);
  const double s2p = 4.0 * x0 / (D * D * D);

  // dP/dx0 = K(s2) s1' + (s1 s2'/2) W(s2) with
  // W(m) = (E(m)/(1-m) - K(m)) / m, which has a finite limit pi/4 at m = 0;
  // the series takes over where the direct form would cancel.
  double W;
  if (s2 > 1e-4) {
    W = (ellip_E(s2) / (1.0 - s2) - ellip_K(s2)) / s2;
  } else {
    W = 0.5 * kPi *
        (0.5 + s2 * (9.0 / 16.0 + s2 * (75.0 / 128.0 + s2 * 1225.0 / 2048.0)));
  }
  return ellip_K(s2) * s1p + 0.5 * s1 * s2p * W;
}

LoopSpec make_loop_from_x0(double x0, Alpha alpha) {
  LoopSpec loop;
  loop.alpha = alpha.value();
  loop.x0 = x0;
  loop.beta = beta_from_x0(x0, alpha);
  loop.period = period_quadrature(loop.beta, alpha);
  loop.holonomy = holonomy(loop);
  return loop;
}

LoopSpec make_loop_from_beta(double beta, Alpha alpha) {
  return make_loop_from_x0(x0_from_beta(beta, alpha), alpha);
}

double holonomy(const LoopSpec& loop) {
  const Alpha alpha(loop.alpha);
  SymmetricTrajectory traj = flow_symmetric_half_period(loop.x0, alpha);
  const SymFlowState end = traj.at(*traj.half_period());
  return std::sqrt(std::abs(std::pow(end.a, loop.alpha) * end.b));
}

}  // namespace solvegeo
