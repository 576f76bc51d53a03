#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) with a 4th-order
// continuous extension. Trajectories keep the interpolation coefficients of
// every accepted step, so dense evaluation and event location work after the
// fact; a trajectory is immutable once built and safe to share across threads.

namespace solvegeo {

struct IntegratorConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  bool dense_output = true;
};

class IntegratorFailure : public std::runtime_error {
 public:
  IntegratorFailure(const std::string& what, double t_reached)
      : std::runtime_error(what + " (t reached: " + std::to_string(t_reached) + ")"),
        t_reached_(t_reached) {}
  double t_reached() const { return t_reached_; }

 private:
  double t_reached_;
};

template <std::size_t N>
using OdeState = std::array<double, N>;

template <std::size_t N>
class Trajectory {
 public:
  struct Step {
    double t0, h;
    // contiguous-output coefficients: y(t0 + s h) =
    // c0 + s (c1 + (1-s)(c2 + s (c3 + (1-s) c4)))
    std::array<OdeState<N>, 5> c;
  };

  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }
  const OdeState<N>& final_state() const { return final_; }
  const std::vector<Step>& steps() const { return steps_; }

  OdeState<N> at(double t) const {
    if (steps_.empty()) return final_;
    if (t <= t_begin_) t = t_begin_;
    if (t >= t_end_) t = t_end_;
    // binary search for the step containing t
    std::size_t lo = 0, hi = steps_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (steps_[mid].t0 <= t)
        lo = mid;
      else
        hi = mid - 1;
    }
    const Step& st = steps_[lo];
    const double s = (t - st.t0) / st.h;
    const double s1 = 1.0 - s;
    OdeState<N> y;
    for (std::size_t i = 0; i < N; ++i) {
      y[i] = st.c[0][i] +
             s * (st.c[1][i] +
                  s1 * (st.c[2][i] + s * (st.c[3][i] + s1 * st.c[4][i])));
    }
    return y;
  }

  // First root of g(t, y(t)) strictly after t_from, located by scanning the
  // accepted steps for a sign change and polishing with bisection.
  std::optional<double> first_root_after(
      double t_from,
      const std::function<double(double, const OdeState<N>&)>& g) const {
    double t_prev = std::max(t_from, t_begin_);
    double g_prev = g(t_prev, at(t_prev));
    for (const Step& st : steps_) {
      const double t1 = st.t0 + st.h;
      if (t1 <= t_prev) continue;
      const double g1 = g(t1, at(t1));
      if (g_prev == 0.0 && t_prev > t_from) return t_prev;
      if (g_prev * g1 < 0.0) {
        double lo = t_prev, hi = t1, glo = g_prev;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi));
             ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = g(mid, at(mid));
          if (gm == 0.0) return mid;
          if (glo * gm < 0.0)
            hi = mid;
          else {
            lo = mid;
            glo = gm;
          }
        }
        return 0.5 * (lo + hi);
      }
      t_prev = t1;
      g_prev = g1;
    }
    return std::nullopt;
  }

  template <std::size_t M, class RHS>
  friend Trajectory<M> integrate(RHS&& rhs, const OdeState<M>& y0, double t0,
                                 double t1, const IntegratorConfig& cfg);

 private:
  double t_begin_ = 0.0, t_end_ = 0.0;
  OdeState<N> final_{};
  std::vector<Step> steps_;
};

namespace dopri_detail {
// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                 c5 = 8.0 / 9.0;
// error = b - bhat
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                 e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense-output coefficients
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;
}  // namespace dopri_detail

template <std::size_t N, class RHS>
Trajectory<N> integrate(RHS&& rhs, const OdeState<N>& y0, double t0, double t1,
                        const IntegratorConfig& cfg = {}) {
  using namespace dopri_detail;
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (!(t1 >= t0)) throw std::invalid_argument("integrate: need t1 >= t0");

  Trajectory<N> traj;
  traj.t_begin_ = t0;
  traj.t_end_ = t0;
  traj.final_ = y0;
  if (t1 == t0) return traj;

  OdeState<N> y = y0;
  OdeState<N> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
  double t = t0;
  rhs(t, y, k1);

  // initial step from the magnitude of the derivative
  double h;
  {
    double ny = 0.0, nf = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      ny = std::max(ny, std::abs(y[i]));
      nf = std::max(nf, std::abs(k1[i]));
    }
    h = (nf > 0.0) ? 0.01 * std::max(1.0, ny) / nf : 1e-3 * (t1 - t0);
    h = std::min({h, t1 - t0, cfg.max_step});
  }

  const int max_steps = 50'000'000;
  for (int nstep = 0; nstep < max_steps; ++nstep) {
    if (t >= t1) break;
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      traj.final_ = y;
      traj.t_end_ = t;
      throw IntegratorFailure("integrate: step size underflow", t);
    }
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }

    for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    rhs(t + h, ynew, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                             e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc =
          cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / static_cast<double>(N));

    if (err <= 1.0) {
      if (cfg.dense_output) {
        typename Trajectory<N>::Step st;
        st.t0 = t;
        st.h = h;
        for (std::size_t i = 0; i < N; ++i) {
          const double dy = ynew[i] - y[i];
          const double bspl = h * k1[i] - dy;
          st.c[0][i] = y[i];
          st.c[1][i] = dy;
          st.c[2][i] = bspl;
          st.c[3][i] = dy - h * k7[i] - bspl;
          st.c[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                            d6 * k6[i] + d7 * k7[i]);
        }
        traj.steps_.push_back(st);
      }
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (last || t >= t1) break;
    }

    double fac = 0.9 * std::pow(std::max(err, 1e-20), -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h = std::min({h * fac, cfg.max_step, t1 - t > 0 ? t1 - t : h * fac});
    if (!(h > 0.0)) h = std::numeric_limits<double>::min();
  }

  traj.final_ = y;
  traj.t_end_ = t;
  if (t < t1) throw IntegratorFailure("integrate: step budget exhausted", t);
  return traj;
}

}  // namespace solvegeo
