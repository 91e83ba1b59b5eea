// Mixed radial-angular norms ||v||_(p,q), vector-field Z norms, the weighted
// sup-in-time norm of the contraction space, frequency-zone diagnostics,
// log-log decay fits and the Klainerman-Sobolev ratio.

#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "epdw/params.hpp"
#include "epdw/state.hpp"

namespace epdw::norms {

struct MixedNormSpec {
  double p_radial = 2.0;   // outer exponent in r (may be infinity)
  double q_angular = 2.0;  // inner exponent over the circle (may be infinity)
  int n_r = 0;             // 0 -> 2n chosen at evaluation time
  int n_theta = 256;
};

// ||v||_(p,q) = || v(r w) r^{1/p} ||_{L^p dr; L^q(S^1)}; (2,2) reproduces the
// Cartesian L2 norm up to polar quadrature error.
double mixed_norm(const RealField& field, const GridSpec& grid, MixedNormSpec spec = {});

enum class ZField { identity, dt, d1, d2, L0, L1, L2, Omega12 };
inline constexpr std::array<ZField, 8> kAllZFields = {
    ZField::identity, ZField::dt, ZField::d1, ZField::d2,
    ZField::L0,       ZField::L1, ZField::L2, ZField::Omega12};
const char* z_name(ZField f);

// One scalar unknown at one time: spectral coefficients of w and of dt w.
struct ScalarSlice {
  double time = 1.0;
  GridSpec grid;
  ComplexField what;
  ComplexField wthat;
};

// Z w in physical space. dt comes from the stored derivative; spatial
// derivatives act as i xi multipliers; x factors multiply in physical space.
RealField z_apply(const ScalarSlice& slice, ZField field);

struct ZNormValue {
  int order_s = 1;
  MixedNormSpec pq;
  double value = 0.0;
  std::map<std::string, double> breakdown;  // per Z-field term
};

ZNormValue z_norm(const ScalarSlice& slice, int s, MixedNormSpec spec = {});
// Vector version: pointwise Euclidean magnitude over components before the
// mixed norm.
ZNormValue z_norm(std::span<const ScalarSlice> components, int s, MixedNormSpec spec = {});

// How second time derivatives are produced when a norm needs dt(dt u): from
// the equation dtt u = Lap u - (mu/t) dt u + F. A nonlinear run must supply
// the |u|^p spectrum; the linear run passes nonlinear = false for F = 0.
struct DerivativeContext {
  DampingParams params;
  const ComplexField* forcing_hat = nullptr;
  bool nonlinear = false;
};

ScalarSlice slice_u(const SpectralState& state);
std::array<ScalarSlice, 3> slices_du(const SpectralState& state, const DerivativeContext& ctx);

double z_norm_u(const SpectralState& state, MixedNormSpec spec = {});
double z_norm_du(const SpectralState& state, const DerivativeContext& ctx);

struct TimeSample {
  const SpectralState* state = nullptr;
  DerivativeContext ctx;
};

// sup_m [ t^{1-delta} ||u||_{Z,1,2} + t ||du||_{Z,1,2} ] over the samples.
double x_norm(std::span<const TimeSample> samples, const ContractionParams& cparams);

// Spectral L2 mass split over A1 = {|xi|>=1}, A2 = {|xi|<=1<=t|xi|},
// A3 = {t|xi|<=1}; the three parts sum to the total mass.
struct ZoneMasses {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};
ZoneMasses zone_norms(const SpectralState& state);

struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
  int samples = 0;
};

// Least-squares line on (log t, log value) restricted to [t_lo, t_hi].
// Requires >= 8 samples in the window and positive values.
DecayFit decay_fit(std::span<const double> t, std::span<const double> value, double t_lo,
                   double t_hi);

// ||u||_inf / (t^{1/2} (||u||_{Z,1,2} + ||du||_{Z,1,2})); 0 for the zero state.
double ks_ratio(const SpectralState& state, const DerivativeContext& ctx);

double linf(const RealField& field);

// The six data-norm terms entering the smallness budget, evaluated at t = 1
// with dt u(1) = u1 and dtt u(1) = Lap u0 - mu u1 (+ eps^{p-1}|u0|^p when the
// dealiased power spectrum is supplied).
struct DataNormReport {
  double u0_z12 = 0.0;
  double grad_u0_z12 = 0.0;
  double u1_z12 = 0.0;
  double u1_z1p2 = 0.0;       // (1+eps1, 2)
  double sum_z1p2 = 0.0;      // u0+u1 in (1+eps1, 2)
  double sum_z12 = 0.0;
  double total = 0.0;
};
DataNormReport a_norm(const CauchyData& data, const DampingParams& params,
                      const ContractionParams& cparams,
                      const ComplexField* u0_power_hat = nullptr);

}  // namespace epdw::norms
