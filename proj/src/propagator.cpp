#include "epdw/propagator.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

#include "epdw/specfun.hpp"

namespace epdw::propagator {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_args(double t, double tau, double ximag) {
  if (!(tau >= 1.0) || !(t >= tau)) {
    throw std::invalid_argument("propagator: need 1 <= tau <= t, got t = " + std::to_string(t) +
                                ", tau = " + std::to_string(tau));
  }
  if (!(ximag >= 0.0)) {
    throw std::invalid_argument("propagator: ximag must be >= 0");
  }
}

void check_index(int k, int j) {
  if (k < 0 || k > 1 || j < 0 || j > 1) {
    throw std::invalid_argument("propagator: k and j must be 0 or 1");
  }
}

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::runtime_error(std::string("propagator: non-finite ") + what +
                             " (bug signal, should not happen in the valid domain)");
  }
  return v;
}

// Zero-frequency closed forms: Psi_0 = 1, Psi_1 = int_tau^t (tau/s)^mu ds.
ModeMultipliers zero_frequency(const DampingParams& params, double t, double tau) {
  const double mu = params.mu;
  ModeMultipliers m;
  m.psi0 = 1.0;
  m.dpsi0 = 0.0;
  m.psi1 = (tau - std::pow(tau, mu) * std::pow(t, 1.0 - mu)) / (mu - 1.0);
  m.dpsi1 = std::pow(tau / t, mu);
  return m;
}

// Shared scalar prefactor of the J-form: (pi/2) csc(rho pi) t^rho / tau^(rho-1).
double j_form_base(const DampingParams& params, double t, double tau) {
  const double rho = params.rho();
  return 0.5 * kPi / std::sin(rho * kPi) * std::pow(t, rho) * std::pow(tau, 1.0 - rho);
}

ModeMultipliers from_quads(const JQuad& qt, const JQuad& qtau, double base, double ximag) {
  ModeMultipliers m;
  m.psi0 = base * ximag * (qtau.j1mr * qt.jr + qtau.jrm1 * qt.jmr);
  m.psi1 = base * (qtau.jmr * qt.jr - qtau.jr * qt.jmr);
  m.dpsi0 = base * ximag * ximag * (qtau.j1mr * qt.jrm1 - qtau.jrm1 * qt.j1mr);
  m.dpsi1 = base * ximag * (qtau.jmr * qt.jrm1 + qtau.jr * qt.j1mr);
  return m;
}

ModeMultipliers j_form(const DampingParams& params, double t, double tau, double ximag) {
  const JQuad qt = j_quad(params, t * ximag);
  const JQuad qtau = j_quad(params, tau * ximag);
  return from_quads(qt, qtau, j_form_base(params, t, tau), ximag);
}

// Quadratic-in-|xi|^2 fill between the closed form at 0 and the J-form at the
// threshold; the residual is O(threshold^4) in the even Taylor expansion.
ModeMultipliers small_frequency(const DampingParams& params, double t, double tau, double ximag) {
  const ModeMultipliers at0 = zero_frequency(params, t, tau);
  const ModeMultipliers anchor = j_form(params, t, tau, kSmallFrequency);
  const double w = (ximag / kSmallFrequency) * (ximag / kSmallFrequency);
  ModeMultipliers m;
  m.psi0 = at0.psi0 + (anchor.psi0 - at0.psi0) * w;
  m.psi1 = at0.psi1 + (anchor.psi1 - at0.psi1) * w;
  m.dpsi0 = at0.dpsi0 + (anchor.dpsi0 - at0.dpsi0) * w;
  m.dpsi1 = at0.dpsi1 + (anchor.dpsi1 - at0.dpsi1) * w;
  return m;
}

using Cplx = std::complex<double>;

Cplx hankel_pm(const DampingParams&, double nu, double z, specfun::HankelKind kind) {
  return specfun::hankel(kind, nu, z);
}

// Hankel determinant: H^+_a(t|xi|) H^-_b(tau|xi|) - H^+_b(tau|xi|) H^-_a(t|xi|).
Cplx hankel_det(const DampingParams& params, double a, double b, double zt, double ztau) {
  using specfun::HankelKind;
  return hankel_pm(params, a, zt, HankelKind::plus) * hankel_pm(params, b, ztau, HankelKind::minus) -
         hankel_pm(params, b, ztau, HankelKind::plus) * hankel_pm(params, a, zt, HankelKind::minus);
}

Cplx hankel_base(const DampingParams& params, double t, double tau) {
  const double rho = params.rho();
  return Cplx(0.0, 0.25 * kPi) * std::pow(t, rho) * std::pow(tau, 1.0 - rho);
}

}  // namespace

JQuad j_quad(const DampingParams& params, double z) {
  const double rho = params.rho();
  JQuad q;
  q.jr = specfun::bessel_j(rho, z);
  q.jrm1 = specfun::bessel_j(rho - 1.0, z);
  q.jmr = specfun::bessel_j(-rho, z);
  q.j1mr = specfun::bessel_j(1.0 - rho, z);
  return q;
}

JTableCache::JTableCache(const DampingParams& params, std::vector<double> magnitudes)
    : params_(params), mags_(std::move(magnitudes)) {}

const std::vector<JQuad>& JTableCache::at_time(double s) {
  std::uint64_t key;
  static_assert(sizeof(key) == sizeof(s));
  std::memcpy(&key, &s, sizeof(key));
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;

  std::vector<JQuad> table(mags_.size());
  for (std::size_t i = 0; i < mags_.size(); ++i) {
    if (mags_[i] >= kSmallFrequency) {
      table[i] = j_quad(params_, s * mags_[i]);
    }
    // magnitudes below the threshold never read the table
  }
  return tables_.emplace(key, std::move(table)).first->second;
}

ModeMultipliers multipliers(const DampingParams& params, double t, double tau, double ximag) {
  check_args(t, tau, ximag);
  ModeMultipliers m;
  if (ximag == 0.0) {
    m = zero_frequency(params, t, tau);
  } else if (ximag < kSmallFrequency) {
    m = small_frequency(params, t, tau, ximag);
  } else {
    m = j_form(params, t, tau, ximag);
  }
  require_finite(m.psi0, "Psi_0");
  require_finite(m.psi1, "Psi_1");
  require_finite(m.dpsi0, "dt Psi_0");
  require_finite(m.dpsi1, "dt Psi_1");
  return m;
}

std::vector<ModeMultipliers> multiplier_table(double t, double tau, JTableCache& cache) {
  const DampingParams& params = cache.params();
  check_args(t, tau, 0.0);
  const std::vector<double>& mags = cache.magnitudes();
  const std::vector<JQuad>& qt = cache.at_time(t);
  const std::vector<JQuad>& qtau = cache.at_time(tau);
  const double base = j_form_base(params, t, tau);

  std::vector<ModeMultipliers> out(mags.size());
  bool have_small_anchors = false;
  ModeMultipliers at0, anchor;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    const double xm = mags[i];
    if (xm >= kSmallFrequency) {
      out[i] = from_quads(qt[i], qtau[i], base, xm);
    } else if (xm == 0.0) {
      out[i] = zero_frequency(params, t, tau);
    } else {
      if (!have_small_anchors) {
        at0 = zero_frequency(params, t, tau);
        anchor = j_form(params, t, tau, kSmallFrequency);
        have_small_anchors = true;
      }
      const double w = (xm / kSmallFrequency) * (xm / kSmallFrequency);
      out[i].psi0 = at0.psi0 + (anchor.psi0 - at0.psi0) * w;
      out[i].psi1 = at0.psi1 + (anchor.psi1 - at0.psi1) * w;
      out[i].dpsi0 = at0.dpsi0 + (anchor.dpsi0 - at0.dpsi0) * w;
      out[i].dpsi1 = at0.dpsi1 + (anchor.dpsi1 - at0.dpsi1) * w;
    }
  }
  return out;
}

double psi(const DampingParams& params, int k, int j, double t, double tau, double ximag) {
  check_index(k, j);
  const ModeMultipliers m = multipliers(params, t, tau, ximag);
  if (k == 0) return j == 0 ? m.psi0 : m.psi1;
  return j == 0 ? m.dpsi0 : m.dpsi1;
}

std::complex<double> psi_hankel(const DampingParams& params, int k, int j, double t, double tau,
                                double ximag) {
  check_index(k, j);
  check_args(t, tau, ximag);
  if (!(ximag > 0.0)) {
    throw std::invalid_argument("psi_hankel: the Hankel form is undefined at ximag = 0");
  }
  const double rho = params.rho();
  const double sign = j == 0 ? 1.0 : -1.0;
  const Cplx det = hankel_det(params, rho - k, rho - 1.0 + j, t * ximag, tau * ximag);
  return sign * hankel_base(params, t, tau) * std::pow(ximag, 1.0 + k - j) * det;
}

double psi_tt(const DampingParams& params, int j, double t, double tau, double ximag) {
  check_index(0, j);
  const ModeMultipliers m = multipliers(params, t, tau, ximag);
  const double dpsi = j == 0 ? m.dpsi0 : m.dpsi1;
  if (ximag < kSmallFrequency) {
    // The defining equation is exact given the interpolated lower derivatives.
    const double v = j == 0 ? m.psi0 : m.psi1;
    return -ximag * ximag * v - (params.mu / t) * dpsi;
  }
  const double rho = params.rho();
  const JQuad qtau = j_quad(params, tau * ximag);
  const double jrm2 = specfun::bessel_j(rho - 2.0, t * ximag);
  const double j2mr = specfun::bessel_j(2.0 - rho, t * ximag);
  const double base = j_form_base(params, t, tau);
  double det;
  if (j == 0) {
    det = base * ximag * ximag * ximag * (qtau.j1mr * jrm2 + qtau.jrm1 * j2mr);
  } else {
    det = base * ximag * ximag * (qtau.jmr * jrm2 - qtau.jr * j2mr);
  }
  return require_finite(det + dpsi / t, "dtt Psi");
}

TtFormEval psi_tt_hankel_eval(const DampingParams& params, int j, double t, double tau,
                              double ximag) {
  check_index(0, j);
  check_args(t, tau, ximag);
  if (!(ximag > 0.0)) {
    throw std::invalid_argument("psi_tt_hankel: the Hankel form is undefined at ximag = 0");
  }
  using specfun::HankelKind;
  const double rho = params.rho();
  const double sign = j == 0 ? 1.0 : -1.0;
  const double b = j == 0 ? rho - 1.0 : rho;
  const Cplx ha = hankel_pm(params, rho - 2.0, t * ximag, HankelKind::plus);
  const Cplx hb = hankel_pm(params, b, tau * ximag, HankelKind::plus);
  // H^- = conj(H^+) for real order and argument
  const Cplx det = ha * std::conj(hb) - hb * std::conj(ha);
  const Cplx base = hankel_base(params, t, tau);
  const double pref = std::abs(base) * std::pow(ximag, 3.0 - j);
  const Cplx dpsi = psi_hankel(params, 1, j, t, tau, ximag);
  TtFormEval out;
  out.value = sign * base * std::pow(ximag, 3.0 - j) * det + dpsi / t;
  const double eps = std::numeric_limits<double>::epsilon();
  out.rounding_bound = 128.0 * eps *
                       (pref * 2.0 * std::abs(ha) * std::abs(hb) + std::abs(dpsi) / t +
                        std::abs(out.value));
  return out;
}

std::complex<double> psi_tt_hankel(const DampingParams& params, int j, double t, double tau,
                                   double ximag) {
  return psi_tt_hankel_eval(params, j, t, tau, ximag).value;
}

Matrix2 propagator_matrix(const DampingParams& params, double t, double tau, double ximag) {
  const ModeMultipliers m = multipliers(params, t, tau, ximag);
  return Matrix2{{{m.psi0, m.psi1}, {m.dpsi0, m.dpsi1}}};
}

PropagatorSample sample(const DampingParams& params, double t, double tau, double ximag) {
  const ModeMultipliers m = multipliers(params, t, tau, ximag);
  PropagatorSample out;
  out.t = t;
  out.tau = tau;
  out.ximag = ximag;
  out.psi[0][0] = m.psi0;
  out.psi[0][1] = m.psi1;
  out.psi[1][0] = m.dpsi0;
  out.psi[1][1] = m.dpsi1;
  out.psi_tt[0] = psi_tt(params, 0, t, tau, ximag);
  out.psi_tt[1] = psi_tt(params, 1, t, tau, ximag);
  return out;
}

}  // namespace epdw::propagator
