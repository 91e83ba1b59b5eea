// Brute-force validation oracle: adaptive Dormand-Prince 5(4) integration of
// the damped per-mode oscillator and of the Bessel ODE. Compiled into the
// test suites and the validate-* commands, never into the hot solver path.

#pragma once

#include <cstdint>
#include <functional>

#include "epdw/params.hpp"

namespace epdw::oracle {

struct OdeResult {
  double t_final = 0.0;
  double y = 0.0;
  double yp = 0.0;
  double est_error = 0.0;  // accumulated local error estimates
  std::int64_t steps = 0;
};

// Right-hand side of a second-order scalar ODE y'' = f(t, y, y').
using SecondOrderRhs = std::function<double(double t, double y, double yp)>;

// Adaptive DP5(4) with error-per-unit-step control, so the accumulated
// estimate stays below tol over the whole interval. t_end < t_start
// integrates backwards. Throws std::runtime_error on step-size underflow.
OdeResult integrate_second_order(const SecondOrderRhs& rhs, double t_start, double y0, double y0p,
                                 double t_end, double tol);

// y'' + ximag^2 y + (mu/t) y' = 0 from (y0, y0p) at tau up to t_end.
OdeResult integrate_mode(const DampingParams& params, double ximag, double tau, double y0,
                         double y0p, double t_end, double tol);

// z^2 y'' + z y' + (z^2 - order^2) y = 0 from (y0, y0p) at z0 up to z_end.
OdeResult integrate_bessel(double order, double z0, double y0, double y0p, double z_end,
                           double tol);

}  // namespace epdw::oracle
