#include "epdw/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "epdw/fft.hpp"

namespace epdw::norms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_inf(double p) { return std::isinf(p); }

// Bilinear sample of a periodic field at physical point (x, y).
double sample_bilinear(const RealField& f, const GridSpec& g, double x, double y) {
  const double gx = (x + g.half_width) / g.dx();
  const double gy = (y + g.half_width) / g.dx();
  const int ix0 = int(std::floor(gx));
  const int iy0 = int(std::floor(gy));
  const double fx = gx - ix0;
  const double fy = gy - iy0;
  auto wrap = [&](int k) {
    int m = k % g.n;
    return m < 0 ? m + g.n : m;
  };
  const int x0 = wrap(ix0), x1 = wrap(ix0 + 1);
  const int y0 = wrap(iy0), y1 = wrap(iy0 + 1);
  const double v00 = f[g.at(y0, x0)], v01 = f[g.at(y0, x1)];
  const double v10 = f[g.at(y1, x0)], v11 = f[g.at(y1, x1)];
  return (1.0 - fy) * ((1.0 - fx) * v00 + fx * v01) + fy * ((1.0 - fx) * v10 + fx * v11);
}

void validate_spec(const MixedNormSpec& spec, const GridSpec& grid, int n_r) {
  if (spec.n_theta < 64) {
    throw std::invalid_argument("MixedNormSpec: n_theta must be >= 64");
  }
  if (n_r < grid.n) {
    throw std::invalid_argument("MixedNormSpec: n_r must be >= grid n");
  }
  if (!(spec.p_radial >= 1.0) || !(spec.q_angular >= 1.0)) {
    throw std::invalid_argument("MixedNormSpec: exponents must be >= 1");
  }
}

// Shared physical-space ingredients of the Z fields for one slice.
struct SliceFields {
  double time;
  GridSpec grid;
  RealField w, wt, w1, w2;  // w, dt w, d1 w, d2 w
};

SliceFields build_fields(const ScalarSlice& slice) {
  SliceFields out;
  out.time = slice.time;
  out.grid = slice.grid;
  const GridSpec& g = slice.grid;
  Fft2D& fft = fft_for(g.n);
  fft.inverse_real(slice.what, out.w);
  fft.inverse_real(slice.wthat, out.wt);

  ComplexField tmp(g.size());
  const int nyq = -g.n / 2;
  for (int iy = 0; iy < g.n; ++iy) {
    for (int ix = 0; ix < g.n; ++ix) {
      // odd multiplier: drop the unpaired Nyquist line
      const double x1 = g.signed_index(ix) == nyq ? 0.0 : g.xi(ix);
      tmp[g.at(iy, ix)] = std::complex<double>(0.0, x1) * slice.what[g.at(iy, ix)];
    }
  }
  fft.inverse_real(tmp, out.w1);
  for (int iy = 0; iy < g.n; ++iy) {
    const double x2 = g.signed_index(iy) == nyq ? 0.0 : g.xi(iy);
    for (int ix = 0; ix < g.n; ++ix) {
      tmp[g.at(iy, ix)] = std::complex<double>(0.0, x2) * slice.what[g.at(iy, ix)];
    }
  }
  fft.inverse_real(tmp, out.w2);
  return out;
}

RealField combine(const SliceFields& sf, ZField field) {
  const GridSpec& g = sf.grid;
  const double t = sf.time;
  RealField out(g.size());
  switch (field) {
    case ZField::identity:
      return sf.w;
    case ZField::dt:
      return sf.wt;
    case ZField::d1:
      return sf.w1;
    case ZField::d2:
      return sf.w2;
    case ZField::L0:
      for (int iy = 0; iy < g.n; ++iy) {
        const double y = g.coord(iy);
        for (int ix = 0; ix < g.n; ++ix) {
          const std::size_t k = g.at(iy, ix);
          out[k] = t * sf.wt[k] + g.coord(ix) * sf.w1[k] + y * sf.w2[k];
        }
      }
      return out;
    case ZField::L1:
      for (int iy = 0; iy < g.n; ++iy) {
        for (int ix = 0; ix < g.n; ++ix) {
          const std::size_t k = g.at(iy, ix);
          out[k] = t * sf.w1[k] + g.coord(ix) * sf.wt[k];
        }
      }
      return out;
    case ZField::L2:
      for (int iy = 0; iy < g.n; ++iy) {
        const double y = g.coord(iy);
        for (int ix = 0; ix < g.n; ++ix) {
          const std::size_t k = g.at(iy, ix);
          out[k] = t * sf.w2[k] + y * sf.wt[k];
        }
      }
      return out;
    case ZField::Omega12:
      for (int iy = 0; iy < g.n; ++iy) {
        const double y = g.coord(iy);
        for (int ix = 0; ix < g.n; ++ix) {
          const std::size_t k = g.at(iy, ix);
          out[k] = g.coord(ix) * sf.w2[k] - y * sf.w1[k];
        }
      }
      return out;
  }
  throw std::logic_error("combine: unreachable");
}

ComplexField dtt_hat(const SpectralState& state, const DerivativeContext& ctx) {
  if (ctx.nonlinear && ctx.forcing_hat == nullptr) {
    throw std::logic_error(
        "slices_du: second time derivative of a nonlinear run needs the |u|^p snapshot");
  }
  const GridSpec& g = state.grid;
  ComplexField out(g.size());
  const double mu_over_t = ctx.params.mu / state.time;
  for (int iy = 0; iy < g.n; ++iy) {
    const double x2 = g.xi(iy);
    for (int ix = 0; ix < g.n; ++ix) {
      const double x1 = g.xi(ix);
      const std::size_t k = g.at(iy, ix);
      out[k] = -(x1 * x1 + x2 * x2) * state.vhat[k] - mu_over_t * state.vthat[k];
      if (ctx.forcing_hat != nullptr) out[k] += (*ctx.forcing_hat)[k];
    }
  }
  return out;
}

ComplexField xi_multiply(const ComplexField& in, const GridSpec& g, int axis) {
  ComplexField out(g.size());
  const int nyq = -g.n / 2;
  for (int iy = 0; iy < g.n; ++iy) {
    for (int ix = 0; ix < g.n; ++ix) {
      const int idx = axis == 0 ? ix : iy;
      const double xi = g.signed_index(idx) == nyq ? 0.0 : g.xi(idx);
      out[g.at(iy, ix)] = std::complex<double>(0.0, xi) * in[g.at(iy, ix)];
    }
  }
  return out;
}

}  // namespace

const char* z_name(ZField f) {
  switch (f) {
    case ZField::identity: return "identity";
    case ZField::dt: return "dt";
    case ZField::d1: return "d1";
    case ZField::d2: return "d2";
    case ZField::L0: return "L0";
    case ZField::L1: return "L1";
    case ZField::L2: return "L2";
    case ZField::Omega12: return "O12";
  }
  return "?";
}

double mixed_norm(const RealField& field, const GridSpec& grid, MixedNormSpec spec) {
  const int n_r = spec.n_r > 0 ? spec.n_r : 2 * grid.n;
  validate_spec(spec, grid, n_r);

  const double r_max = grid.half_width;
  const double dr = r_max / (n_r - 1);
  const double dtheta = 2.0 * 3.14159265358979323846 / spec.n_theta;

  const bool pinf = is_inf(spec.p_radial);
  const bool qinf = is_inf(spec.q_angular);

  double outer_acc = 0.0;
  double outer_max = 0.0;
  for (int i = 0; i < n_r; ++i) {
    const double r = i * dr;
    double inner_acc = 0.0;
    double inner_max = 0.0;
    for (int j = 0; j < spec.n_theta; ++j) {
      const double th = j * dtheta;
      const double v = std::abs(sample_bilinear(field, grid, r * std::cos(th), r * std::sin(th)));
      if (qinf) {
        inner_max = std::max(inner_max, v);
      } else {
        inner_acc += std::pow(v, spec.q_angular);
      }
    }
    const double g = qinf ? inner_max : std::pow(inner_acc * dtheta, 1.0 / spec.q_angular);
    if (pinf) {
      outer_max = std::max(outer_max, g);
    } else {
      // (g r^{1/p})^p dr = g^p r dr; trapezoid in r
      const double w = (i == 0 || i == n_r - 1) ? 0.5 : 1.0;
      outer_acc += w * std::pow(g, spec.p_radial) * r * dr;
    }
  }
  return pinf ? outer_max : std::pow(outer_acc, 1.0 / spec.p_radial);
}

RealField z_apply(const ScalarSlice& slice, ZField field) {
  return combine(build_fields(slice), field);
}

ZNormValue z_norm(const ScalarSlice& slice, int s, MixedNormSpec spec) {
  return z_norm(std::span<const ScalarSlice>(&slice, 1), s, spec);
}

ZNormValue z_norm(std::span<const ScalarSlice> components, int s, MixedNormSpec spec) {
  if (components.empty()) throw std::invalid_argument("z_norm: no components");
  if (s != 0 && s != 1) throw std::invalid_argument("z_norm: s must be 0 or 1");

  std::vector<SliceFields> fields;
  fields.reserve(components.size());
  for (const auto& c : components) fields.push_back(build_fields(c));
  const GridSpec& g = components[0].grid;

  ZNormValue out;
  out.order_s = s;
  out.pq = spec;
  const auto apply_and_measure = [&](ZField zf) {
    RealField mag = combine(fields[0], zf);
    if (fields.size() > 1) {
      for (auto& x : mag) x *= x;
      for (std::size_t c = 1; c < fields.size(); ++c) {
        RealField fc = combine(fields[c], zf);
        for (std::size_t k = 0; k < mag.size(); ++k) mag[k] += fc[k] * fc[k];
      }
      for (auto& x : mag) x = std::sqrt(x);
    }
    return mixed_norm(mag, g, spec);
  };

  if (s == 0) {
    const double v = apply_and_measure(ZField::identity);
    out.breakdown["identity"] = v;
    out.value = v;
    return out;
  }
  for (ZField zf : kAllZFields) {
    const double v = apply_and_measure(zf);
    out.breakdown[z_name(zf)] = v;
    out.value += v;
  }
  return out;
}

ScalarSlice slice_u(const SpectralState& state) {
  return ScalarSlice{state.time, state.grid, state.vhat, state.vthat};
}

std::array<ScalarSlice, 3> slices_du(const SpectralState& state, const DerivativeContext& ctx) {
  const GridSpec& g = state.grid;
  std::array<ScalarSlice, 3> out;
  out[0] = ScalarSlice{state.time, g, state.vthat, dtt_hat(state, ctx)};
  out[1] = ScalarSlice{state.time, g, xi_multiply(state.vhat, g, 0), xi_multiply(state.vthat, g, 0)};
  out[2] = ScalarSlice{state.time, g, xi_multiply(state.vhat, g, 1), xi_multiply(state.vthat, g, 1)};
  return out;
}

double z_norm_u(const SpectralState& state, MixedNormSpec spec) {
  return z_norm(slice_u(state), 1, spec).value;
}

double z_norm_du(const SpectralState& state, const DerivativeContext& ctx) {
  const auto slices = slices_du(state, ctx);
  return z_norm(std::span<const ScalarSlice>(slices.data(), slices.size()), 1, {}).value;
}

double x_norm(std::span<const TimeSample> samples, const ContractionParams& cparams) {
  double best = 0.0;
  for (const TimeSample& s : samples) {
    const double t = s.state->time;
    const double term = std::pow(t, 1.0 - cparams.delta) * z_norm_u(*s.state) +
                        t * z_norm_du(*s.state, s.ctx);
    best = std::max(best, term);
  }
  return best;
}

ZoneMasses zone_norms(const SpectralState& state) {
  const GridSpec& g = state.grid;
  const double box = 2.0 * g.half_width;
  const double t = state.time;
  ZoneMasses z;
  for (int iy = 0; iy < g.n; ++iy) {
    const double x2 = g.xi(iy);
    for (int ix = 0; ix < g.n; ++ix) {
      const double x1 = g.xi(ix);
      const double m = std::hypot(x1, x2);
      const double e = box * box * std::norm(state.vhat[g.at(iy, ix)]);
      if (m >= 1.0) {
        z.a1 += e;
      } else if (t * m >= 1.0) {
        z.a2 += e;
      } else {
        z.a3 += e;
      }
    }
  }
  return z;
}

DecayFit decay_fit(std::span<const double> t, std::span<const double> value, double t_lo,
                   double t_hi) {
  if (t.size() != value.size()) throw std::invalid_argument("decay_fit: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (!(value[i] > 0.0)) {
      throw std::invalid_argument("decay_fit: values must be positive inside the window");
    }
    xs.push_back(std::log(t[i]));
    ys.push_back(std::log(value[i]));
  }
  if (xs.size() < 8) {
    throw std::invalid_argument("decay_fit: need at least 8 samples in the window, got " +
                                std::to_string(xs.size()));
  }
  const double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  DecayFit fit;
  fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.samples = int(xs.size());
  return fit;
}

double ks_ratio(const SpectralState& state, const DerivativeContext& ctx) {
  const double denom_norms = z_norm_u(state) + z_norm_du(state, ctx);
  if (denom_norms <= 0.0) return 0.0;
  const double sup = linf(state.v_physical());
  return sup / (std::sqrt(state.time) * denom_norms);
}

double linf(const RealField& field) {
  double m = 0.0;
  for (double v : field) m = std::max(m, std::abs(v));
  return m;
}

DataNormReport a_norm(const CauchyData& data, const DampingParams& params,
                      const ContractionParams& cparams, const ComplexField* u0_power_hat) {
  const GridSpec& g = data.grid;
  Fft2D& fft = fft_for(g.n);
  ComplexField u0h, u1h;
  fft.forward_real(data.u0, u0h);
  fft.forward_real(data.u1, u1h);

  // dtt u(1) = Lap u0 - mu u1 (+ eps^{p-1} |u0|^p when supplied)
  ComplexField dtth(g.size());
  const double epow =
      params.epsilon > 0.0 ? std::pow(params.epsilon, params.p_exponent - 1.0) : 0.0;
  for (int iy = 0; iy < g.n; ++iy) {
    const double x2 = g.xi(iy);
    for (int ix = 0; ix < g.n; ++ix) {
      const double x1 = g.xi(ix);
      const std::size_t k = g.at(iy, ix);
      dtth[k] = -(x1 * x1 + x2 * x2) * u0h[k] - params.mu * u1h[k];
      if (u0_power_hat != nullptr) dtth[k] += epow * (*u0_power_hat)[k];
    }
  }

  ScalarSlice su{1.0, g, u0h, u1h};
  ScalarSlice su1{1.0, g, u1h, dtth};
  ComplexField sumh(g.size()), sumth(g.size());
  for (std::size_t k = 0; k < sumh.size(); ++k) {
    sumh[k] = u0h[k] + u1h[k];
    sumth[k] = u1h[k] + dtth[k];
  }
  ScalarSlice ssum{1.0, g, sumh, sumth};
  std::array<ScalarSlice, 2> sgrad = {
      ScalarSlice{1.0, g, xi_multiply(u0h, g, 0), xi_multiply(u1h, g, 0)},
      ScalarSlice{1.0, g, xi_multiply(u0h, g, 1), xi_multiply(u1h, g, 1)}};

  MixedNormSpec l2{};
  MixedNormSpec weighted{1.0 + cparams.eps1, 2.0};

  DataNormReport rep;
  rep.u0_z12 = z_norm(su, 1, l2).value;
  rep.grad_u0_z12 = z_norm(std::span<const ScalarSlice>(sgrad.data(), sgrad.size()), 1, l2).value;
  rep.u1_z12 = z_norm(su1, 1, l2).value;
  rep.u1_z1p2 = z_norm(su1, 1, weighted).value;
  rep.sum_z1p2 = z_norm(ssum, 1, weighted).value;
  rep.sum_z12 = z_norm(ssum, 1, l2).value;
  rep.total = rep.u0_z12 + rep.grad_u0_z12 + rep.u1_z12 + rep.u1_z1p2 + rep.sum_z1p2 + rep.sum_z12;
  return rep;
}

}  // namespace epdw::norms
