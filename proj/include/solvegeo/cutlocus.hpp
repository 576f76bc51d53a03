#pragma once

#include <string>
#include <vector>

#include "solvegeo/algebra.hpp"
#include "solvegeo/flow.hpp"
#include "solvegeo/period.hpp"

// The plane curves traced by endpoints of growing symmetric flowlines, the
// candidate cut-locus boundary curve in the plane z = 0, geodesic-segment
// classification against the period, and the grid checks behind the
// bounding-box and monotonicity properties.

namespace solvegeo {

enum class SegmentKind { Small, Perfect, Large, Unclassifiable };

struct SegmentClass {
  SegmentKind kind = SegmentKind::Unclassifiable;
  double slack = 0.0;   // |v| - period of the loop through v/|v|
  double period = 0.0;  // 0 when unclassifiable
};

// Compares |v| with the period of the loop level set through v/|v|.
// Directions on the coordinate planes or at the equilibria carry no loop and
// come back Unclassifiable. The perfect band is |slack| <= tol * max(1, P).
SegmentClass classify(const Vec3& v, Alpha alpha, double tol = 1e-9);

struct PlaneCurveSample {
  double t;
  double a, b;
  double aprime, bprime;
};

// n_samples points of (a(t), b(t)) over t in (0, rho], with the derivatives
// straight from the governing equations.
std::vector<PlaneCurveSample> lambda_curve(double x0, Alpha alpha,
                                           int n_samples);

struct BoundaryPoint {
  double x0;
  double a_end, b_end;     // endpoint of the perfect geodesic, plane z = 0
  double da_dx0, db_dx0;   // total derivatives along the boundary curve
};

// One boundary-curve point per grid abscissa. The total derivatives combine
// the first-variation flow with dP/dx0 (closed form at alpha = 1/2, central
// differences of the quadrature period otherwise).
std::vector<BoundaryPoint> boundary_curve(Alpha alpha,
                                          const std::vector<double>& x0_grid);

struct CheckReport {
  std::string name;
  std::string grid;
  bool pass = false;
  bool exploratory = false;
  double worst_margin = 0.0;  // positive means the property held with room
  std::string location;
  std::string detail;
};

// a'(t) > 0 and b'(t) > 0 on (0, rho) across the grid; reports the smallest
// derivative value seen and where.
CheckReport check_bounding_box(Alpha alpha, const std::vector<double>& x0_grid,
                               int n_t_samples);

// (t, b'(t)) trace over (0, halfperiods * rho]; feeds plots and the check
// that b' does go negative beyond the half period.
std::vector<std::pair<double, double>> bprime_trace(Alpha alpha, double x0,
                                                    double halfperiods, int n);

struct ReciprocityCheck {
  double mu;        // a(rho) / (alpha y(rho))
  double residual;  // |a x - alpha b y| at the half period
};
ReciprocityCheck check_reciprocity(double x0, Alpha alpha);

struct PartnerCheck {
  double distance;  // |E(V+) - E(V-)|
  GroupPoint plus, minus;
};
// Builds the perfect partner pair from the mid-arc point of the loop.
PartnerCheck check_partner_identification(double x0, Alpha alpha);

// dP/dx0 minus the explicit comparison slope; negative on the whole canonical
// interval at alpha = 1/2.
double g_function(double x0);
CheckReport check_g_negative(const std::vector<double>& x0_grid);

// The closed-form certificate ratio whose strict bound by 1 pins down the
// sign of the boundary-curve slope at alpha = 1/2; evaluated in extended
// precision since the numerator cancels near x0 -> 1.
double monotonicity_certificate_ratio(double x0);
CheckReport check_monotonicity_certificate(const std::vector<double>& x0_grid);

// da/dx0 > 0, db/dx0 <= slack, b_end >= 4 - b_floor_slack over the grid
// (alpha = 1/2 boundary-curve monotonicity at desk scale).
CheckReport check_boundary_monotonicity(const std::vector<double>& x0_grid,
                                        double db_slack = 1e-8,
                                        double b_floor_slack = 1e-3);

struct HalfPeriodShiftCheck {
  double residual;  // zbar + (dP/dx0 / 2) z' at the half period
  double zbar;
  double zprime;
};
// The moving-endpoint identity tying the variational flow to dP/dx0
// (alpha = 1/2).
HalfPeriodShiftCheck check_half_period_time_shift(double x0);

struct BLimitEstimate {
  double alpha;
  double estimate;     // Richardson-extrapolated limit of b_end as x0 -> 1
  double conjectured;  // 2 / alpha
  double rate;         // fitted decay exponent
  bool stable;
};
// Exploratory probe of the conjectured boundary-height limit; never a gate.
std::vector<BLimitEstimate> explore_b_limit(const std::vector<double>& alphas);

// Uniform grid on the open interval (lo, hi), both ends inset.
std::vector<double> make_grid(double lo, double hi, int n, double inset = 1e-6);

}  // namespace solvegeo
