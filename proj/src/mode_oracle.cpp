#include "epdw/mode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epdw::oracle {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights equal kA[6] (FSAL); the error weights are b5 - b4.
constexpr double kE[7] = {71.0 / 57600,       0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200,  22.0 / 525,   -1.0 / 40};

struct State2 {
  double y, yp;
};

}  // namespace

OdeResult integrate_second_order(const SecondOrderRhs& rhs, double t_start, double y0, double y0p,
                                 double t_end, double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) {
    throw std::invalid_argument("integrate_second_order: tol must lie in [1e-13, 1e-6]");
  }
  const double span = t_end - t_start;
  OdeResult out;
  out.t_final = t_end;
  out.y = y0;
  out.yp = y0p;
  if (span == 0.0) return out;

  const double dir = span > 0.0 ? 1.0 : -1.0;
  const double total = std::abs(span);
  double t = t_start;
  State2 s{y0, y0p};
  double h = dir * std::min(total, 1e-2);

  // FSAL: k[0] of the next step reuses k[6] of the accepted one.
  double k_y[7], k_p[7];
  k_y[0] = s.yp;
  k_p[0] = rhs(t, s.y, s.yp);

  const double h_floor = 1e-14 * std::max(1.0, total);
  while (dir * (t_end - t) > 0.0) {
    if (dir * (t + h - t_end) > 0.0) h = t_end - t;
    for (int i = 1; i < 7; ++i) {
      double yy = s.y, pp = s.yp;
      for (int j = 0; j < i; ++j) {
        yy += h * kA[i][j] * k_y[j];
        pp += h * kA[i][j] * k_p[j];
      }
      k_y[i] = pp;
      k_p[i] = rhs(t + kC[i] * h, yy, pp);
    }
    double y5 = s.y, p5 = s.yp, err_y = 0.0, err_p = 0.0;
    for (int j = 0; j < 6; ++j) {
      y5 += h * kA[6][j] * k_y[j];
      p5 += h * kA[6][j] * k_p[j];
    }
    for (int j = 0; j < 7; ++j) {
      err_y += h * kE[j] * k_y[j];
      err_p += h * kE[j] * k_p[j];
    }

    const double scale_y = 1.0 + std::max(std::abs(s.y), std::abs(y5));
    const double scale_p = 1.0 + std::max(std::abs(s.yp), std::abs(p5));
    const double err = std::hypot(err_y / scale_y, err_p / scale_p);
    // error-per-unit-step budget
    const double budget = tol * std::abs(h) / total;

    if (err <= budget) {
      t += h;
      s.y = y5;
      s.yp = p5;
      out.est_error += err;
      ++out.steps;
      k_y[0] = k_y[6];
      k_p[0] = k_p[6];
    }
    const double grow = err > 0.0 ? 0.9 * std::pow(budget / err, 0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);
    if (std::abs(h) < h_floor) {
      throw std::runtime_error("integrate_second_order: step size underflow at t = " +
                               std::to_string(t));
    }
  }

  out.t_final = t;
  out.y = s.y;
  out.yp = s.yp;
  return out;
}

OdeResult integrate_mode(const DampingParams& params, double ximag, double tau, double y0,
                         double y0p, double t_end, double tol) {
  if (!(tau >= 1.0)) {
    throw std::invalid_argument("integrate_mode: tau must be >= 1");
  }
  const double mu = params.mu;
  const double xi2 = ximag * ximag;
  return integrate_second_order(
      [mu, xi2](double t, double y, double yp) { return -xi2 * y - (mu / t) * yp; }, tau, y0, y0p,
      t_end, tol);
}

OdeResult integrate_bessel(double order, double z0, double y0, double y0p, double z_end,
                           double tol) {
  if (!(z0 > 0.0) || !(z_end > 0.0)) {
    throw std::invalid_argument("integrate_bessel: arguments must be positive");
  }
  const double nu2 = order * order;
  return integrate_second_order(
      [nu2](double z, double y, double yp) { return -yp / z - (1.0 - nu2 / (z * z)) * y; }, z0, y0,
      y0p, z_end, tol);
}

}  // namespace epdw::oracle
