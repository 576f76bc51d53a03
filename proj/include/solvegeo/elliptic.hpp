#pragma once

// Complete elliptic integrals K(m), E(m) and the Jacobi dn function, all in
// the parameter convention (m is the squared modulus, as in Mathematica's
// EllipticK/EllipticE/JacobiDN). Everything is computed by arithmetic-
// geometric-mean iteration; no external special-function dependency.

namespace solvegeo {

// K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta), m < 1.
// Rejects m >= 1 - 1e-12 (logarithmic divergence at m = 1).
double ellip_K(double m);

// E(m) = int_0^{pi/2} sqrt(1 - m sin^2 theta) dtheta, m <= 1.
double ellip_E(double m);

// dn(u | m) for m in [0, 1), by the descending Landen backward recurrence.
double jacobi_dn(double u, double m);

// K for negative parameter through K(m) = K(m/(m-1)) / sqrt(1-m); agrees
// with the direct AGM value and exercises the same transformation used to
// push the half-period closed form onto [0, 1).
double imaginary_modulus_K(double m_neg);

struct KBounds {
  double lower, upper;
};
// Two-sided bound (pi/2)*sqrt(atanh(r)/r) < K(r^2) < (pi/2)*atanh(r)/r,
// valid for 0 < r < 1.
KBounds K_bounds(double r);

}  // namespace solvegeo
