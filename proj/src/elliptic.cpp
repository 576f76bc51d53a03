#include "solvegeo/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace solvegeo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxAgmIter = 40;
}  // namespace

double ellip_K(double m) {
  if (!(m < 1.0 - 1e-12))
    throw std::domain_error("ellip_K: parameter must satisfy m < 1 - 1e-12");
  double a = 1.0, b = std::sqrt(1.0 - m);
  for (int i = 0; i < kMaxAgmIter; ++i) {
    if (std::abs(a - b) <= 2.3e-16 * std::abs(a)) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (a + b);
}

double ellip_E(double m) {
  if (!(m <= 1.0)) throw std::domain_error("ellip_E: parameter must satisfy m <= 1");
  if (m == 1.0) return 1.0;
  if (m > 1.0 - 1e-12) {
    // log-singular expansion in the complementary parameter
    const double mc = 1.0 - m;
    return 1.0 + 0.5 * (std::log(4.0 / std::sqrt(mc)) - 0.5) * mc;
  }
  double a = 1.0, b = std::sqrt(1.0 - m);
  double csum = 0.5 * m;  // 2^{-1} c_0^2 with c_0^2 = m (valid for m < 0 too)
  double pw = 1.0;
  for (int i = 0; i < kMaxAgmIter; ++i) {
    if (std::abs(a - b) <= 2.3e-16 * std::abs(a)) break;
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pw *= 2.0;
    csum += 0.5 * pw * c * c;
  }
  return kPi / (a + b) * (1.0 - csum);
}

double jacobi_dn(double u, double m) {
  if (!(m >= 0.0 && m < 1.0))
    throw std::domain_error("jacobi_dn: parameter must lie in [0, 1)");
  if (m == 0.0) return 1.0;

  double a[kMaxAgmIter + 1], c[kMaxAgmIter + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (std::abs(c[n]) > 1e-17 && n < kMaxAgmIter) {
    const double an = 0.5 * (a[n] + b);
    const double cn = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
    a[n] = an;
    c[n] = cn;
  }
  double phi = std::ldexp(1.0, n) * a[n] * u;
  for (int k = n; k >= 1; --k) {
    double s = c[k] / a[k] * std::sin(phi);
    s = std::fmin(1.0, std::fmax(-1.0, s));
    phi = 0.5 * (phi + std::asin(s));
  }
  // dn is positive throughout, so the defining relation is safe and stays
  // well conditioned at the quarter periods where the amplitude is near pi/2
  const double sn = std::sin(phi);
  return std::sqrt(1.0 - m * sn * sn);
}

double imaginary_modulus_K(double m_neg) {
  if (!(m_neg < 0.0))
    throw std::domain_error("imaginary_modulus_K: parameter must be negative");
  return ellip_K(m_neg / (m_neg - 1.0)) / std::sqrt(1.0 - m_neg);
}

KBounds K_bounds(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("K_bounds: argument must lie in (0, 1)");
  const double q = std::atanh(r) / r;
  return {0.5 * kPi * std::sqrt(q), 0.5 * kPi * q};
}

}  // namespace solvegeo
