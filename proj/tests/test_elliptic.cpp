#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "solvegeo/elliptic.hpp"
#include "solvegeo/quadrature.hpp"

using namespace solvegeo;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle: adaptive Simpson on the defining integrals. Kept local
// to the tests so the production path (AGM) is never exercised twice.
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}
double integral(const std::function<double(double)>& f, double a, double b,
                double tol = 1e-14) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

double K_oracle(double m) {
  return integral(
      [m](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - m * s * s);
      },
      0.0, kPi / 2);
}
double E_oracle(double m) {
  return integral(
      [m](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - m * s * s);
      },
      0.0, kPi / 2);
}

std::mt19937_64 rng(777);
double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("K at reference points") {
  CHECK(ellip_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_K(0.5) == doctest::Approx(K_oracle(0.5)).epsilon(1e-12));
  CHECK(ellip_K(-1.0) == doctest::Approx(K_oracle(-1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(ellip_K(1.0), std::domain_error);
  CHECK_THROWS_AS(ellip_K(1.0 - 1e-13), std::domain_error);
}

TEST_CASE("E at reference points") {
  CHECK(ellip_E(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_E(1.0) == 1.0);
  CHECK(ellip_E(0.3) == doctest::Approx(E_oracle(0.3)).epsilon(1e-12));
  CHECK_THROWS_AS(ellip_E(1.0 + 1e-9), std::domain_error);
}

TEST_CASE("AGM matches the defining integrals on random parameters") {
  for (int i = 0; i < 100; ++i) {
    const double m = uni(-5.0, 0.999);
    CHECK(ellip_K(m) == doctest::Approx(K_oracle(m)).epsilon(1e-11));
    CHECK(ellip_E(m) == doctest::Approx(E_oracle(m)).epsilon(1e-11));
  }
}

TEST_CASE("Legendre relation") {
  for (int i = 0; i < 40; ++i) {
    const double m = uni(0.001, 0.999);
    const double lhs = ellip_E(m) * ellip_K(1 - m) + ellip_E(1 - m) * ellip_K(m) -
                       ellip_K(m) * ellip_K(1 - m);
    CHECK(lhs == doctest::Approx(kPi / 2).epsilon(1e-11));
  }
}

TEST_CASE("dn basics and periodicity") {
  CHECK(jacobi_dn(0.0, 0.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(jacobi_dn(2.31, 0.0) == 1.0);
  CHECK_THROWS_AS(jacobi_dn(1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(jacobi_dn(1.0, 1.0), std::domain_error);
  for (int i = 0; i < 30; ++i) {
    const double m = uni(0.01, 0.98), u = uni(-4, 4);
    const double period = 2.0 * ellip_K(m);
    CHECK(jacobi_dn(u + period, m) ==
          doctest::Approx(jacobi_dn(u, m)).epsilon(1e-10));
    // defining relation against sn through the quarter-period value
    CHECK(jacobi_dn(u, m) >= std::sqrt(1 - m) - 1e-12);
    CHECK(jacobi_dn(u, m) <= 1.0 + 1e-12);
  }
  // dn at the quarter period hits the complementary modulus
  CHECK(jacobi_dn(ellip_K(0.6), 0.6) ==
        doctest::Approx(std::sqrt(0.4)).epsilon(1e-11));
}

TEST_CASE("integral of dn^2 over a quarter period is E") {
  const double m = 0.4;
  const QuadResult q = integrate_gk(
      [m](double u) {
        const double d = jacobi_dn(u, m);
        return d * d;
      },
      0.0, ellip_K(m), 1e-13, 1e-13);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(ellip_E(m)).epsilon(1e-10));
}

TEST_CASE("negative-parameter evaluation of K") {
  CHECK(imaginary_modulus_K(-1.0) == doctest::Approx(ellip_K(-1.0)).epsilon(1e-13));
  CHECK(imaginary_modulus_K(-1e-9) == doctest::Approx(kPi / 2).epsilon(1e-8));
  // the parameter that appears at x0 = 0.8 in the half-period form
  const double m = -0.8703168589192667;
  CHECK(imaginary_modulus_K(m) == doctest::Approx(ellip_K(m)).epsilon(1e-13));
  CHECK_THROWS_AS(imaginary_modulus_K(0.1), std::domain_error);
  for (int i = 0; i < 25; ++i) {
    const double mm = uni(-8.0, -1e-6);
    CHECK(imaginary_modulus_K(mm) == doctest::Approx(ellip_K(mm)).epsilon(1e-12));
  }
}

TEST_CASE("two-sided K bound") {
  for (double r : {0.5, 0.99}) {
    const KBounds b = K_bounds(r);
    const double k = ellip_K(r * r);
    CHECK(b.lower < k);
    CHECK(k < b.upper);
  }
  const KBounds tiny = K_bounds(1e-8);
  CHECK(tiny.lower == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(tiny.upper == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK_THROWS_AS(K_bounds(0.0), std::domain_error);
  CHECK_THROWS_AS(K_bounds(1.0), std::domain_error);

  // strict on a fine grid
  for (int i = 1; i < 1000; ++i) {
    const double r = i / 1000.0;
    const KBounds b = K_bounds(r);
    const double k = ellip_K(r * r);
    CHECK(b.lower < k);
    CHECK(k < b.upper);
  }
}
