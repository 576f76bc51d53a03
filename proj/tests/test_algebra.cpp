#include <doctest.h>

#include <cmath>
#include <random>

#include "solvegeo/algebra.hpp"

using namespace solvegeo;

namespace {
std::mt19937_64 rng(12345);
double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
GroupPoint rand_point() { return {uni(-3, 3), uni(-3, 3), uni(-2, 2)}; }
}  // namespace

TEST_CASE("group law basics") {
  const Alpha a(0.7);
  const GroupPoint id{0, 0, 0};
  const GroupPoint p{1, 2, 3};
  auto r = group_mul(id, p, a);
  CHECK(r.x == doctest::Approx(1.0));
  CHECK(r.y == doctest::Approx(2.0));
  CHECK(r.z == doctest::Approx(3.0));

  // exp factor appears on the first coordinate only
  auto s = group_mul(GroupPoint{0, 0, 1}, GroupPoint{1, 0, 0}, Alpha(1.0));
  CHECK(s.x == doctest::Approx(std::exp(1.0)));
  CHECK(s.y == doctest::Approx(0.0));
  CHECK(s.z == doctest::Approx(1.0));
}

TEST_CASE("two-sided identity and inverse") {
  for (int i = 0; i < 40; ++i) {
    const Alpha a(uni(-1, 1));
    const GroupPoint p = rand_point();
    const GroupPoint q = group_mul(p, GroupPoint{0, 0, 0}, a);
    CHECK(q.x == doctest::Approx(p.x).epsilon(1e-14));
    CHECK(q.y == doctest::Approx(p.y).epsilon(1e-14));

    const GroupPoint inv = group_inv(p, a);
    const GroupPoint e1 = group_mul(p, inv, a);
    const GroupPoint e2 = group_mul(inv, p, a);
    for (double v : {e1.x, e1.y, e1.z, e2.x, e2.y, e2.z})
      CHECK(std::abs(v) < 1e-12);
  }
  const GroupPoint m = group_inv(GroupPoint{1, 0, 0}, Alpha(1.0));
  CHECK(m.x == doctest::Approx(-1.0));
  CHECK(m.y == 0.0);
  CHECK(m.z == 0.0);
}

TEST_CASE("associativity on random triples") {
  for (int i = 0; i < 60; ++i) {
    const Alpha a(uni(-1, 1));
    const GroupPoint p = rand_point(), q = rand_point(), r = rand_point();
    const GroupPoint lhs = group_mul(group_mul(p, q, a), r, a);
    const GroupPoint rhs = group_mul(p, group_mul(q, r, a), a);
    CHECK(std::abs(lhs.x - rhs.x) < 1e-10 * std::max(1.0, std::abs(lhs.x)));
    CHECK(std::abs(lhs.y - rhs.y) < 1e-10 * std::max(1.0, std::abs(lhs.y)));
    CHECK(std::abs(lhs.z - rhs.z) < 1e-10);
  }
}

TEST_CASE("structure field vanishes exactly at the equilibria") {
  for (double av : {0.25, 0.5, 1.0}) {
    const Alpha a(av);
    const Vec3 pole = structure_field(Vec3{0, 0, 1}, a);
    CHECK(pole.norm() == 0.0);
    const double xe = std::sqrt(av / (1 + av)), ye = std::sqrt(1 / (1 + av));
    const Vec3 eq = structure_field(Vec3{xe, ye, 0}, a);
    CHECK(std::abs(eq.x) < 1e-16);
    CHECK(std::abs(eq.y) < 1e-16);
    CHECK(std::abs(eq.z) < 1e-16);
    CHECK(equilibrium_abscissa(a) == doctest::Approx(xe));
  }
  const Vec3 v = structure_field(Vec3{1, 0, 0}, Alpha(1.0));
  CHECK(v.x == 0.0);
  CHECK(v.y == 0.0);
  CHECK(v.z == -1.0);
}

TEST_CASE("structure field is tangent to the sphere") {
  for (int i = 0; i < 100; ++i) {
    const Alpha a(uni(-1, 1));
    Vec3 u{uni(-1, 1), uni(-1, 1), uni(-1, 1)};
    const double n = u.norm();
    if (n < 0.1) continue;
    u = u * (1.0 / n);
    CHECK(std::abs(structure_field(u, a).dot(u)) < 1e-14);
  }
}

TEST_CASE("level value") {
  CHECK(level_value(Vec3{1, 0.5, 0.3}, Alpha(1.0)) == doctest::Approx(0.5));
  CHECK(level_value(Vec3{0, 1, 0}, Alpha(0.5)) == 0.0);
  CHECK(level_value(Vec3{-0.6, 0.8, 0}, Alpha(0.5)) ==
        doctest::Approx(std::pow(0.6, 0.5) * 0.8));
  CHECK_THROWS_AS(level_value(Vec3{1, 0, 0}, Alpha(0.0)), std::domain_error);
  CHECK_THROWS_AS(level_value(Vec3{1, 0, 0}, Alpha(-0.5)), std::domain_error);
}

TEST_CASE("sphere state normalization window") {
  const SphereState s(1.0 + 5e-7, 0.0, 0.0);
  CHECK(s.u1() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s.vec().norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(SphereState(0.9, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SphereState(0.0, 0.0, 1.1), std::invalid_argument);
}

TEST_CASE("curvature table") {
  const CurvatureTable sol = curvature_table(Alpha(1.0));
  CHECK(sol.xy.sectional == 1.0);
  CHECK(sol.xy.intrinsic == 0.0);
  CHECK(sol.xy.extrinsic == -1.0);
  CHECK(sol.xy.mean == 0.0);  // minimal exactly at alpha = 1

  CHECK(curvature_table(Alpha(0.5)).xy.mean == doctest::Approx(0.25));

  for (int i = 0; i < 25; ++i) {
    const CurvatureTable t = curvature_table(Alpha(uni(-1, 1)));
    for (const CurvatureRow& r : {t.xy, t.xz, t.yz})
      CHECK(r.intrinsic ==
            doctest::Approx(r.extrinsic + r.sectional).epsilon(1e-15));
    CHECK(t.xz.mean == 0.0);
    CHECK(t.yz.mean == 0.0);
  }
}

TEST_CASE("scalar curvature") {
  CHECK(scalar_curvature(Alpha(0.5)) == doctest::Approx(-1.5));
  CHECK(scalar_curvature(Alpha(-1.0)) == doctest::Approx(-6.0));
  for (int i = 0; i < 20; ++i) {
    const double a = uni(0, 1);
    CHECK(scalar_curvature(Alpha(a)) ==
          doctest::Approx(scalar_curvature(Alpha(1.0 - a))).epsilon(1e-14));
  }
}

TEST_CASE("alpha domain") {
  CHECK_THROWS_AS(Alpha(1.5), std::domain_error);
  CHECK_THROWS_AS(Alpha(-1.0001), std::domain_error);
  CHECK_NOTHROW(Alpha(1.0));
  CHECK_NOTHROW(Alpha(-1.0));
}
