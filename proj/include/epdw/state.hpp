// Spectral field state (v, dt v) at one time stamp, Cauchy data profiles,
// and flat-binary snapshot persistence.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "epdw/grid.hpp"
#include "epdw/params.hpp"

namespace epdw {

using ComplexField = std::vector<std::complex<double>>;
using RealField = std::vector<double>;

struct SpectralState {
  double time = 1.0;
  GridSpec grid;
  ComplexField vhat;   // spectral coefficients of v
  ComplexField vthat;  // spectral coefficients of dt v

  RealField v_physical() const;
  RealField vt_physical() const;
};

struct CauchyData {
  GridSpec grid;
  RealField u0;  // initial displacement
  RealField u1;  // initial velocity
  std::string profile;  // descriptor of the analytic profile
};

// c exp(1 - 1/(1 - |x|^2)) on |x| < 1, zero outside; value c at the origin.
double bump_profile(double x1, double x2, double amplitude = 1.0);

// kind: "generic" (u1 = u0) or "cancel" (u1 = -u0); optional "zero".
CauchyData make_bump_data(const GridSpec& grid, const std::string& kind,
                          double amplitude = 1.0);

// State at t = 1 with (v, dt v) = eps * (u0, u1).
SpectralState make_initial_state(const CauchyData& data, double eps);

// Total mass-in-shell diagnostics: L2 mass of v outside radius r.
double mass_outside_radius(const SpectralState& state, double radius);

// Spectral energy E = 1/2 int (|dt v|^2 + |grad v|^2) dx via Parseval.
double energy(const SpectralState& state);
double kinetic_energy(const SpectralState& state);  // 1/2 int |dt v|^2 dx

// Flat binary snapshot: magic "EPDW1", n (u32 LE), L, time, mu (f64 LE),
// then n*n f64 LE for v and n*n for dt v, row-major physical space.
void save_snapshot(const SpectralState& state, double mu, const std::string& path);
SpectralState load_snapshot(const std::string& path, double* mu_out = nullptr);

}  // namespace epdw
