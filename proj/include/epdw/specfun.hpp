// Bessel functions J_nu and Hankel functions H_nu^± of real (generally
// non-integer) order and positive real argument, with derivative recurrences.
//
// Evaluation strategy: power series with compensated summation for z <= 15,
// large-argument (Hankel) asymptotic expansion with 12 terms beyond. The
// supported band is |order| <= 4 and z in [1e-8, 1e6]; inside it the absolute
// error estimate attached to BesselEval is a conservative bound.

#pragma once

#include <complex>

namespace epdw::specfun {

inline constexpr double kMinArgument = 1e-8;
inline constexpr double kMaxArgument = 1e6;
inline constexpr double kMaxOrder = 4.0;

// Series/asymptotic crossover. The series loses about z*log10(e) digits to
// cancellation, so 15 keeps >= 10 digits in double with compensated sums.
inline constexpr double kSeriesAsymptoticSwitch = 15.0;

// Minimum distance of a Hankel order from an integer. Closer than this the
// csc(nu*pi) combination degenerates and evaluation is refused.
inline constexpr double kIntegerOrderGuard = 1e-6;

struct BesselEval {
  double order = 0.0;
  double argument = 0.0;
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

enum class HankelKind { plus, minus };

struct HankelEval {
  HankelKind kind = HankelKind::plus;
  double order = 0.0;
  double argument = 0.0;
  std::complex<double> value;
};

// Gamma function for real arguments (Lanczos, g = 7, 9 coefficients, with
// reflection for x < 1/2). Poles return +/-infinity.
double gamma_fn(double x);

// J_order(z). Throws std::domain_error for z <= 0 or |order| > 4, and never
// returns NaN inside the supported band.
double bessel_j(double order, double z);
BesselEval bessel_j_eval(double order, double z);

// J'_order(z) = J_{order-1}(z) - (order/z) J_order(z).
double bessel_j_prime(double order, double z);

// H_order^+(z) = i csc(order pi) (e^{-order pi i} J_order(z) - J_{-order}(z)),
// H_order^-(z) = i csc(order pi) (J_{-order}(z) - e^{order pi i} J_order(z)).
// Throws std::domain_error when the order is within 1e-6 of an integer.
std::complex<double> hankel(HankelKind kind, double order, double z);
HankelEval hankel_eval(HankelKind kind, double order, double z);

}  // namespace epdw::specfun
