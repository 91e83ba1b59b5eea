// Exact Fourier-multiplier solution operator of the damped mode equation
//   dtt v + |xi|^2 v + (mu/t) dt v = 0,  t >= tau >= 1.
//
// The four multipliers dt^k Psi_j (k, j in {0,1}) and the second derivatives
// dtt Psi_j are evaluated from the real Bessel-J cross-product form; the
// complex Hankel determinant form is kept as an independent verification
// path. The zero-frequency mode uses the elementary closed form, and
// 0 < |xi| < 1e-3 is filled by quadratic-in-|xi|^2 interpolation between the
// closed form and the J-form anchored at |xi| = 1e-3.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "epdw/params.hpp"

namespace epdw::propagator {

// Below this frequency the J-form determinants are replaced by the
// interpolated small-frequency path.
inline constexpr double kSmallFrequency = 1e-3;

// The four multiplier values at one (t, tau, |xi|).
struct ModeMultipliers {
  double psi0 = 0.0;   // Psi_0
  double psi1 = 0.0;   // Psi_1
  double dpsi0 = 0.0;  // dt Psi_0
  double dpsi1 = 0.0;  // dt Psi_1
};

struct PropagatorSample {
  double t = 0.0;
  double tau = 0.0;
  double ximag = 0.0;
  double psi[2][2] = {};   // [k][j] = dt^k Psi_j
  double psi_tt[2] = {};   // dtt Psi_j
};

// J_nu at one argument for the four orders entering the first-derivative
// determinants: nu = rho, rho-1, -rho, 1-rho.
struct JQuad {
  double jr = 0.0;
  double jrm1 = 0.0;
  double jmr = 0.0;
  double j1mr = 0.0;
};

JQuad j_quad(const DampingParams& params, double z);

// Per-run cache of JQuad tables over a fixed sorted magnitude list, keyed by
// the time stamp multiplying the magnitudes. Inserts are mutex-guarded and
// idempotent; returned references stay valid for the cache lifetime.
class JTableCache {
 public:
  JTableCache(const DampingParams& params, std::vector<double> magnitudes);

  const std::vector<JQuad>& at_time(double s);
  const std::vector<double>& magnitudes() const { return mags_; }
  const DampingParams& params() const { return params_; }

 private:
  DampingParams params_;
  std::vector<double> mags_;
  std::map<std::uint64_t, std::vector<JQuad>> tables_;
  std::mutex mutex_;
};

// All four multipliers at once (shared Bessel evaluations).
ModeMultipliers multipliers(const DampingParams& params, double t, double tau, double ximag);

// Multipliers for every magnitude in the cache's list, for one (t, tau).
std::vector<ModeMultipliers> multiplier_table(double t, double tau, JTableCache& cache);

// dt^k Psi_j(t, tau, |xi|), J-form. Preconditions: 1 <= tau <= t, ximag >= 0.
double psi(const DampingParams& params, int k, int j, double t, double tau, double ximag);

// Hankel determinant form; imaginary part is a rounding diagnostic.
// Requires ximag > 0.
std::complex<double> psi_hankel(const DampingParams& params, int k, int j, double t, double tau,
                                double ximag);

// dtt Psi_j from the J-form second-derivative determinants (plus the
// t^{-1} dt Psi_j correction term).
double psi_tt(const DampingParams& params, int j, double t, double tau, double ximag);

// Hankel-form counterpart of psi_tt, verification only. The determinant
// cancels catastrophically for small tau*ximag near t = tau (the +-nu cross
// products grow like (tau ximag)^{2 rho - 2} while the value stays bounded),
// so the evaluation also reports the double-precision rounding bound implied
// by that conditioning; agreement checks cannot resolve the forms below it.
struct TtFormEval {
  std::complex<double> value;
  double rounding_bound = 0.0;
};
TtFormEval psi_tt_hankel_eval(const DampingParams& params, int j, double t, double tau,
                              double ximag);
std::complex<double> psi_tt_hankel(const DampingParams& params, int j, double t, double tau,
                                   double ximag);

// S(t, tau) = [[Psi_0, Psi_1], [dt Psi_0, dt Psi_1]]; satisfies
// S(t, s) S(s, tau) = S(t, tau) and det S = (tau/t)^mu.
using Matrix2 = std::array<std::array<double, 2>, 2>;
Matrix2 propagator_matrix(const DampingParams& params, double t, double tau, double ximag);

PropagatorSample sample(const DampingParams& params, double t, double tau, double ximag);

}  // namespace epdw::propagator
