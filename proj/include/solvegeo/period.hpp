#pragma once

#include "solvegeo/algebra.hpp"
#include "solvegeo/flow.hpp"

// The period function of the loop level sets: singular quadrature for any
// alpha in (0, 1], elliptic closed forms for alpha = 1 (Sol) and alpha = 1/2,
// root-finding for the equator-crossing times, the beta <-> x0 parameter
// conversions, the closed-form derivative dP/dx0 at alpha = 1/2, and the
// holonomy invariant.

namespace solvegeo {

struct EndpointTimes {
  double t0, t1;  // forward / backward flow times to the equator, both > 0
};

// Positive roots of  alpha e^{2 t0} + e^{-2 alpha t0} = (alpha+1)/beta^2 and
// alpha e^{-2 t1} + e^{2 alpha t1} = (alpha+1)/beta^2. Requires beta in (0,1).
EndpointTimes endpoint_times(double beta, Alpha alpha);

// Trigonometric solution of the cubic the equations reduce to when
// alpha = 1/2; oracle for endpoint_times along the real root branch.
EndpointTimes endpoint_times_cardano_half(double beta);

// Loop period by quadrature of the flat-flow-line arclength integral, with
// the inverse-square-root endpoint singularities removed by substitution.
double period_quadrature(double beta, Alpha alpha);

// Closed form for alpha = 1 (Sol).
double period_sol(double beta);

// Closed form for alpha = 1/2 in terms of the canonical abscissa x0, via the
// negative-parameter transformation of K.
double period_half(double x0);

// Independent closed form for alpha = 1/2 in terms of beta, using the real
// equator-crossing times.
double period_half_from_endpoints(double beta);

// Level matching between the top-of-loop parameter beta and the canonical
// equator abscissa x0 (a closed form in both directions for every alpha;
// x0_from_beta needs a 1-d root solve).
double beta_from_x0(double x0, Alpha alpha);
double x0_from_beta(double beta, Alpha alpha);
// High-side equator abscissa of the loop with level value c in (0, level_max).
double x0_from_level(double c, Alpha alpha);

// d/dx0 of period_half, evaluated from the hand-differentiated closed form
// (with a series guard where the two elliptic terms cancel).
double dperiod_dx0(double x0);

// Ingredients of the alpha = 1/2 closed form: y(t)^2 = nu1 + nu2 dn(t nu3, nu4)^2
// with nu4 <= 0, and the transformed parameters sigma1, sigma2 placing the
// elliptic argument in [0, 1).
struct HalfPeriodClosedForm {
  double nu1, nu2, nu3, nu4;
  double sigma1, sigma2;
};
HalfPeriodClosedForm half_period_closed_form(double x0);

// nu1 + nu2 dn(t nu3, nu4)^2 evaluated through the negative-parameter
// transformation of dn.
double y_squared_closed_form(double t, const HalfPeriodClosedForm& cf);

// A loop level set identified by either parameter, with its period and
// holonomy invariant.
struct LoopSpec {
  double alpha;
  double beta;
  double x0;
  double period;
  double holonomy;
};
LoopSpec make_loop_from_x0(double x0, Alpha alpha);
LoopSpec make_loop_from_beta(double beta, Alpha alpha);

// sqrt(|a(rho)^alpha b(rho)|) at the half period of the symmetric flowline.
double holonomy(const LoopSpec& loop);

}  // namespace solvegeo
