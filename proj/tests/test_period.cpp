#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "solvegeo/elliptic.hpp"
#include "solvegeo/flow.hpp"
#include "solvegeo/period.hpp"

using namespace solvegeo;

namespace {
constexpr double kPi = std::numbers::pi;
std::mt19937_64 rng(99);
double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
}  // namespace

TEST_CASE("equator-crossing times solve their equations") {
  for (int i = 0; i < 40; ++i) {
    const double av = uni(0.1, 1.0), beta = uni(0.05, 0.99);
    const Alpha alpha(av);
    const auto [t0, t1] = endpoint_times(beta, alpha);
    const double R = (av + 1) / (beta * beta);
    CHECK(std::abs(av * std::exp(2 * t0) + std::exp(-2 * av * t0) - R) <
          1e-12 * std::max(1.0, R));
    CHECK(std::abs(av * std::exp(-2 * t1) + std::exp(2 * av * t1) - R) <
          1e-12 * std::max(1.0, R));
    CHECK(t0 > 0.0);
    CHECK(t1 > 0.0);
  }
  // degenerate limit: both times collapse
  const auto near = endpoint_times(1.0 - 1e-9, Alpha(0.5));
  CHECK(near.t0 < 2e-4);
  CHECK(near.t1 < 2e-4);
  CHECK_THROWS_AS(endpoint_times(1.0, Alpha(0.5)), std::domain_error);
  CHECK_THROWS_AS(endpoint_times(0.0, Alpha(0.5)), std::domain_error);
}

TEST_CASE("trigonometric cubic roots match the general solver") {
  for (double beta : {0.1, 0.3, 0.55, 0.8, 0.95, 0.999}) {
    const auto a = endpoint_times(beta, Alpha(0.5));
    const auto c = endpoint_times_cardano_half(beta);
    CHECK(a.t0 == doctest::Approx(c.t0).epsilon(1e-12));
    CHECK(a.t1 == doctest::Approx(c.t1).epsilon(1e-12));
  }
}

TEST_CASE("period table rows") {
  CHECK(period_quadrature(0.999, Alpha(0.1)) == doctest::Approx(14.0792).epsilon(4e-4));
  CHECK(period_quadrature(0.999, Alpha(0.5)) == doctest::Approx(6.28842).epsilon(1e-4));
  CHECK(period_quadrature(0.999, Alpha(1.0)) == doctest::Approx(4.44622).epsilon(1e-4));
}

TEST_CASE("closed form for the Sol member") {
  CHECK(period_sol(1.0) == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-15));
  for (double beta : {0.2, 0.5, 0.9, 0.999})
    CHECK(period_sol(beta) ==
          doctest::Approx(period_quadrature(beta, Alpha(1.0))).epsilon(1e-10));
}

TEST_CASE("closed forms for the scalar-curvature maximizer") {
  // quadrature, the endpoint-time elliptic form, and the dn-based form agree
  for (double beta : {0.1, 0.4, 0.7, 0.95}) {
    const double q = period_quadrature(beta, Alpha(0.5));
    CHECK(period_half_from_endpoints(beta) == doctest::Approx(q).epsilon(1e-11));
    CHECK(period_half(x0_from_beta(beta, Alpha(0.5))) ==
          doctest::Approx(q).epsilon(1e-11));
  }
  // equilibrium-side limit of the period
  CHECK(period_half(1.0 / std::sqrt(3.0) + 1e-9) ==
        doctest::Approx(2 * kPi).epsilon(1e-7));
  // the period grows without bound toward the separatrix side
  double prev = 0.0;
  for (double x0 : {0.9, 0.99, 0.999, 0.9999}) {
    const double p = period_half(x0);
    CHECK(p > prev);
    prev = p;
  }
  CHECK(prev > 20.0);
  CHECK_THROWS_AS(period_half(0.5), std::domain_error);
  CHECK_THROWS_AS(period_half(1.0), std::domain_error);
}

TEST_CASE("parameter conversion between beta and x0") {
  // equilibrium maps to beta = 1
  for (double av : {0.3, 0.5, 1.0}) {
    const Alpha alpha(av);
    CHECK(beta_from_x0(equilibrium_abscissa(alpha), alpha) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  // cubic closed form at alpha = 1/2
  const double b = beta_from_x0(0.8, Alpha(0.5));
  CHECK(b * b * b ==
        doctest::Approx(1.5 * std::sqrt(3.0) * (0.8 - 0.512)).epsilon(1e-14));
  // the level values genuinely match, and the maps invert each other
  for (int i = 0; i < 30; ++i) {
    const double av = uni(0.1, 1.0);
    const Alpha alpha(av);
    const double xe = equilibrium_abscissa(alpha);
    const double x0 = xe + (1 - xe) * uni(0.05, 0.95);
    const double beta = beta_from_x0(x0, alpha);
    const Vec3 vb = loop_top_vector(beta, alpha);
    const double lvl_b = level_value(vb, alpha);
    const double lvl_x = std::pow(x0, av) * std::sqrt(1 - x0 * x0);
    CHECK(std::abs(lvl_b - lvl_x) < 1e-12);
    CHECK(x0_from_beta(beta, alpha) == doctest::Approx(x0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(beta_from_x0(0.2, Alpha(0.5)), std::domain_error);
}

TEST_CASE("period derivative closed form") {
  // positive on the whole canonical interval
  for (int i = 1; i <= 50; ++i) {
    const double x0 = 1 / std::sqrt(3.0) + (1 - 1e-3 - 1 / std::sqrt(3.0)) * i / 50.0;
    CHECK(dperiod_dx0(x0) > 0.0);
  }
  // matches central differences of the closed-form period
  for (double x0 : {0.62, 0.7, 0.85, 0.97}) {
    const double h = 1e-6;
    const double fd = (period_half(x0 + h) - period_half(x0 - h)) / (2 * h);
    CHECK(dperiod_dx0(x0) == doctest::Approx(fd).epsilon(1e-6));
  }
  // the guarded branch near the equilibrium endpoint stays consistent
  const double x0 = 1 / std::sqrt(3.0) + 1e-5;
  const double h = 1e-9;
  const double fd = (period_half(x0 + h) - period_half(x0 - h)) / (2 * h);
  CHECK(std::abs(dperiod_dx0(x0) - fd) < 1e-4 * std::max(1.0, std::abs(fd)));
  CHECK_THROWS_AS(dperiod_dx0(0.5), std::domain_error);
}

TEST_CASE("period decreases in beta for the two closed-form members") {
  for (double av : {1.0, 0.5}) {
    const Alpha alpha(av);
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
      const double beta = 0.02 + (0.999 - 0.02) * i / 199.0;
      const double p = period_quadrature(beta, alpha);
      CHECK(p < prev);
      prev = p;
    }
  }
}

TEST_CASE("dn-based closed form reproduces the flow") {
  const Alpha half(0.5);
  for (double x0 : {0.62, 0.8, 0.93}) {
    const HalfPeriodClosedForm cf = half_period_closed_form(x0);
    CHECK(cf.nu4 <= 0.0);
    CHECK(cf.sigma2 >= 0.0);
    CHECK(cf.sigma2 < 1.0);
    CHECK(cf.sigma2 == doctest::Approx(cf.nu4 / (cf.nu4 - 1.0)).epsilon(1e-14));
    CHECK(cf.sigma1 == doctest::Approx(2.0 / (cf.nu3 * std::sqrt(1.0 - cf.nu4))).epsilon(1e-13));

    SymmetricTrajectory traj = flow_symmetric_half_period(x0, half);
    const double rho = *traj.half_period();
    double worst = 0.0;
    for (int k = 0; k <= 300; ++k) {
      const double t = rho * k / 300.0;
      const SymFlowState s = traj.at(t);
      worst = std::max(worst,
                       std::abs(s.y * s.y - y_squared_closed_form(t, cf)));
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("holonomy invariant") {
  const Alpha alpha(0.5);
  const LoopSpec loop = make_loop_from_x0(0.8, alpha);
  CHECK(loop.beta == doctest::Approx(beta_from_x0(0.8, alpha)));
  CHECK(loop.period == doctest::Approx(2 * 3.39949546).epsilon(1e-7));
  CHECK(loop.holonomy > 0.0);

  // independent of the starting point: run the full loop from an interior
  // point through the exponential map and read the invariant off the endpoint
  SymmetricTrajectory traj = flow_symmetric_half_period(0.8, alpha);
  const double rho = *traj.half_period();
  for (double f : {0.2, 0.55}) {
    const SymFlowState s = traj.at(f * rho);
    const GroupPoint e =
        exp_map(Vec3{s.x, s.y, s.z} * loop.period, alpha);
    CHECK(std::abs(e.z) < 1e-8);
    const double h = std::sqrt(std::abs(std::pow(e.x, 0.5) * e.y));
    CHECK(h == doctest::Approx(loop.holonomy).epsilon(1e-7));
  }

  // strictly increasing against the period across loops
  double prev_p = 0.0, prev_h = 0.0;
  for (double x0 : {0.62, 0.7, 0.78, 0.86, 0.94}) {
    const LoopSpec l = make_loop_from_x0(x0, alpha);
    if (prev_p > 0.0) {
      CHECK(l.period > prev_p);
      CHECK(l.holonomy > prev_h);
    }
    prev_p = l.period;
    prev_h = l.holonomy;
  }

  // degenerate limit: the invariant approaches the straight-line value
  const double P1 = 2 * kPi;  // equilibrium-side limit of the period
  const double xe = equilibrium_abscissa(alpha), ye = std::sqrt(1 - xe * xe);
  const double h_lim = std::sqrt(std::pow(P1 * xe, 0.5) * (P1 * ye));
  const LoopSpec tight = make_loop_from_x0(xe + 5e-4, alpha);
  CHECK(tight.holonomy == doctest::Approx(h_lim).epsilon(5e-3));
}
