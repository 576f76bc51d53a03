#include <doctest.h>

#include <cmath>

#include "solvegeo/ode.hpp"

using namespace solvegeo;

namespace {
const auto expo = [](double, const OdeState<1>& y, OdeState<1>& dy) {
  dy[0] = y[0];
};
const auto oscil = [](double, const OdeState<2>& y, OdeState<2>& dy) {
  dy[0] = y[1];
  dy[1] = -y[0];
};
}  // namespace

TEST_CASE("exponential growth to high accuracy") {
  auto traj = integrate<1>(expo, OdeState<1>{1.0}, 0.0, 3.0);
  CHECK(traj.final_state()[0] == doctest::Approx(std::exp(3.0)).epsilon(1e-12));
  CHECK(traj.t_end() == 3.0);
}

TEST_CASE("dense output interpolates between steps") {
  auto traj = integrate<1>(expo, OdeState<1>{1.0}, 0.0, 2.0);
  for (double t : {0.0, 0.137, 0.5, 1.0, 1.618, 2.0})
    CHECK(traj.at(t)[0] == doctest::Approx(std::exp(t)).epsilon(1e-11));
  // node endpoints are hit exactly by the interpolant layout
  const auto& st = traj.steps().front();
  CHECK(traj.at(st.t0)[0] == doctest::Approx(st.c[0][0]).epsilon(1e-15));
}

TEST_CASE("oscillator energy over a long window") {
  auto traj = integrate<2>(oscil, OdeState<2>{1.0, 0.0}, 0.0, 100.0);
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const auto y = traj.at(0.1 * i);
    worst = std::max(worst, std::abs(y[0] * y[0] + y[1] * y[1] - 1.0));
  }
  CHECK(worst < 5e-10);
  CHECK(traj.at(100.0)[0] == doctest::Approx(std::cos(100.0)).epsilon(1e-9));
}

TEST_CASE("event location by sign change") {
  auto traj = integrate<2>(oscil, OdeState<2>{0.0, 1.0}, 0.0, 10.0);
  // y(t) = sin t crosses zero at pi
  auto root = traj.first_root_after(
      0.5, [](double, const OdeState<2>& y) { return y[0]; });
  REQUIRE(root.has_value());
  CHECK(*root == doctest::Approx(std::acos(-1.0)).epsilon(1e-12));
}

TEST_CASE("finite-time blow-up raises with the time reached") {
  const auto riccati = [](double, const OdeState<1>& y, OdeState<1>& dy) {
    dy[0] = y[0] * y[0];
  };
  // y' = y^2, y(0) = 1 blows up at t = 1
  try {
    integrate<1>(riccati, OdeState<1>{1.0}, 0.0, 2.0);
    FAIL("expected IntegratorFailure");
  } catch (const IntegratorFailure& e) {
    CHECK(e.t_reached() > 0.99);
    CHECK(e.t_reached() < 1.01);
  }
}

TEST_CASE("config validation") {
  IntegratorConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate<1>(expo, OdeState<1>{1.0}, 0.0, 1.0, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate<1>(expo, OdeState<1>{1.0}, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("max step is honored") {
  IntegratorConfig cfg;
  cfg.max_step = 0.01;
  auto traj = integrate<1>(expo, OdeState<1>{1.0}, 0.0, 1.0, cfg);
  for (const auto& st : traj.steps()) CHECK(st.h <= 0.01 + 1e-15);
}
