// Problem parameters: the damping coefficient band mu in (2,3) with its
// derived Bessel order rho = -(mu-1)/2, and the exponent bookkeeping used by
// the contraction-space norms.

#pragma once

#include <stdexcept>
#include <string>

namespace epdw {

struct DampingParams {
  double mu;          // damping coefficient, strictly inside (2, 3)
  double p_exponent;  // nonlinearity power, > 2
  double epsilon;     // data amplitude, >= 0

  DampingParams(double mu_in, double p_in, double eps_in = 0.0)
      : mu(mu_in), p_exponent(p_in), epsilon(eps_in) {
    if (!(mu - 2.0 > 1e-12) || !(3.0 - mu > 1e-12)) {
      throw std::invalid_argument("DampingParams: mu must lie strictly inside (2, 3), got mu = " +
                                  std::to_string(mu));
    }
    if (!(p_exponent > 2.0)) {
      throw std::invalid_argument("DampingParams: p_exponent must be > 2, got p = " +
                                  std::to_string(p_exponent));
    }
    if (!(epsilon >= 0.0)) {
      throw std::invalid_argument("DampingParams: epsilon must be >= 0, got " +
                                  std::to_string(epsilon));
    }
  }

  // Always recomputed so the relation holds to machine precision.
  double rho() const { return -(mu - 1.0) / 2.0; }
};

// Derived exponents for the weighted contraction space: delta = 2 eps1/(1+eps1),
// kappa = (1-eps1)/(1+eps1), 1/(1+eps1) = 1/2 + 1/q_tilde, 1/2 = 1/(2+eps2) + 1/q_bar.
struct ContractionParams {
  double eps1;
  double eps2;
  double delta;
  double kappa;
  double q_tilde;
  double q_bar;

  explicit ContractionParams(double eps1_in, double eps2_in = 0.5)
      : eps1(eps1_in), eps2(eps2_in) {
    if (!(eps1 > 0.0) || !(eps1 < 1.0)) {
      throw std::invalid_argument("ContractionParams: eps1 must lie in (0, 1), got " +
                                  std::to_string(eps1));
    }
    if (!(eps2 > 0.0)) {
      throw std::invalid_argument("ContractionParams: eps2 must be > 0, got " +
                                  std::to_string(eps2));
    }
    delta = 2.0 * eps1 / (1.0 + eps1);
    kappa = (1.0 - eps1) / (1.0 + eps1);
    q_tilde = 2.0 * (1.0 + eps1) / (1.0 - eps1);
    q_bar = 2.0 * (2.0 + eps2) / eps2;
  }

  // The two integrability conditions; margin tightens the -1 thresholds.
  bool admissible(double p, double margin = 0.0) const {
    const double c1 = 1.0 + (p - 1.0 - kappa) / 2.0 + p * (delta - 1.0);
    const double c2 = 1.0 + p * (delta - 1.0);
    return c1 < -1.0 - margin && c2 < -1.0 - margin;
  }
};

// Smallest eps1 on a log grid whose ContractionParams are admissible for p
// with a 10% margin; falls back to plain admissibility for p close to 2.
double default_eps1(double p);

}  // namespace epdw
