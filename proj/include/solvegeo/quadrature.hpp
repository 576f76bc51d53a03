#pragma once

#include <functional>

namespace solvegeo {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  bool converged = false;
  int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval. The integrand must be
// finite on [a, b]; endpoint singularities belong to the caller (substitute
// them away first, or use the tanh-sinh rule below).
QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, double rel_tol = 0.0,
                        int max_depth = 48);

// Double-exponential (tanh-sinh) quadrature on [a, b]. Tolerates integrable
// endpoint singularities.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f,
                               double a, double b, double tol);

}  // namespace solvegeo
