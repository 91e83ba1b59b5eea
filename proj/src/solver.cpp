#include "epdw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <stdexcept>

#include "epdw/fft.hpp"

namespace epdw::solver {

namespace {

using propagator::ModeMultipliers;

void apply_multipliers(const SpectralState& in, SpectralState& out,
                       const std::vector<ModeMultipliers>& table, const RadialIndex& radial) {
  const std::size_t sz = in.grid.size();
  out.vhat.resize(sz);
  out.vthat.resize(sz);
  for (std::size_t k = 0; k < sz; ++k) {
    const ModeMultipliers& m = table[radial.shell_of_mode[k]];
    out.vhat[k] = m.psi0 * in.vhat[k] + m.psi1 * in.vthat[k];
    out.vthat[k] = m.dpsi0 * in.vhat[k] + m.dpsi1 * in.vthat[k];
  }
}

// accumulate w += weight * psi1 * f, wt += weight * dpsi1 * f over modes
void accumulate_duhamel(ComplexField& w, ComplexField& wt, const ComplexField& f, double weight,
                        const std::vector<ModeMultipliers>& table, const RadialIndex& radial) {
  for (std::size_t k = 0; k < f.size(); ++k) {
    const ModeMultipliers& m = table[radial.shell_of_mode[k]];
    w[k] += weight * m.psi1 * f[k];
    wt[k] += weight * m.dpsi1 * f[k];
  }
}

double field_l2(const ComplexField& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return std::sqrt(s);
}

double pair_rel_gap(const ComplexField& w1, const ComplexField& wt1, const ComplexField& w0,
                    const ComplexField& wt0) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < w1.size(); ++k) {
    num += std::norm(w1[k] - w0[k]) + std::norm(wt1[k] - wt0[k]);
    den += std::norm(w1[k]) + std::norm(wt1[k]);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

}  // namespace

std::vector<double> simpson_weights(std::span<const double> x) {
  const int n = int(x.size());
  std::vector<double> w(x.size(), 0.0);
  if (n < 2) return w;
  if (n == 2) {
    w[0] = w[1] = 0.5 * (x[1] - x[0]);
    return w;
  }
  int i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    w[i] += (h0 + h1) * (2.0 * h0 - h1) / (6.0 * h0);
    w[i + 1] += (h0 + h1) * (h0 + h1) * (h0 + h1) / (6.0 * h0 * h1);
    w[i + 2] += (h0 + h1) * (2.0 * h1 - h0) / (6.0 * h1);
  }
  if (i == n - 2) {
    // one interval left: quadratic through the last three nodes
    const double h0 = x[n - 2] - x[n - 3];
    const double h1 = x[n - 1] - x[n - 2];
    w[n - 3] += -h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    w[n - 2] += h1 * (h1 + 3.0 * h0) / (6.0 * h0);
    w[n - 1] += h1 * (2.0 * h1 + 3.0 * h0) / (6.0 * (h0 + h1));
  }
  return w;
}

SpectralState linear_evolve(const SpectralState& state, double t_new, const DampingParams& params,
                            PropagatorWorkspace* ws) {
  if (!(state.time >= 1.0) || !(t_new >= state.time)) {
    throw std::invalid_argument("linear_evolve: need 1 <= state.time <= t_new");
  }
  std::unique_ptr<PropagatorWorkspace> local;
  if (ws == nullptr) {
    local = std::make_unique<PropagatorWorkspace>(params, state.grid);
    ws = local.get();
  }
  if (ws->radial.shell_of_mode.size() != state.grid.size()) {
    throw std::invalid_argument("linear_evolve: workspace grid mismatch");
  }
  SpectralState out;
  out.time = t_new;
  out.grid = state.grid;
  const auto table = propagator::multiplier_table(t_new, state.time, ws->cache);
  apply_multipliers(state, out, table, ws->radial);
  return out;
}

ComplexField apply_nonlinearity_hat(const RealField& u, double p, const GridSpec& grid) {
  if (!(p > 2.0)) throw std::invalid_argument("apply_nonlinearity: p must be > 2");
  const int n = grid.n;
  const int n2 = 2 * n;
  Fft2D& fft_n = fft_for(n);
  Fft2D& fft_2n = fft_for(n2);

  ComplexField spec;
  fft_n.forward_real(u, spec);

  // embed modes a, b in [-n/2, n/2) into the 2n lattice
  ComplexField padded(std::size_t(n2) * n2, std::complex<double>(0.0, 0.0));
  auto pos2 = [n2](int s) { return s >= 0 ? s : n2 + s; };
  for (int iy = 0; iy < n; ++iy) {
    const int b = grid.signed_index(iy);
    for (int ix = 0; ix < n; ++ix) {
      const int a = grid.signed_index(ix);
      padded[std::size_t(pos2(b)) * n2 + pos2(a)] = spec[grid.at(iy, ix)];
    }
  }

  RealField fine;
  fft_2n.inverse_real(padded, fine);
  for (auto& v : fine) v = std::pow(std::abs(v), p);

  ComplexField fine_spec;
  fft_2n.forward_real(fine, fine_spec);

  ComplexField out(grid.size());
  for (int iy = 0; iy < n; ++iy) {
    const int b = grid.signed_index(iy);
    for (int ix = 0; ix < n; ++ix) {
      const int a = grid.signed_index(ix);
      out[grid.at(iy, ix)] = fine_spec[std::size_t(pos2(b)) * n2 + pos2(a)];
    }
  }
  return out;
}

RealField apply_nonlinearity(const RealField& u, double p, const GridSpec& grid) {
  const ComplexField spec = apply_nonlinearity_hat(u, p, grid);
  RealField out;
  fft_for(grid.n).inverse_real(spec, out);
  return out;
}

DuhamelResult duhamel(const std::function<RealField(double)>& forcing, const GridSpec& grid,
                      const DampingParams& params, double t, const QuadSpec& quad) {
  if (!(t >= 1.0)) throw std::invalid_argument("duhamel: t must be >= 1");
  PropagatorWorkspace ws(params, grid);
  Fft2D& fft = fft_for(grid.n);

  DuhamelResult res;
  res.state.time = t;
  res.state.grid = grid;
  res.state.vhat.assign(grid.size(), {});
  res.state.vthat.assign(grid.size(), {});
  if (t == 1.0) {
    res.converged = true;
    return res;
  }

  auto integrate = [&](int nodes, ComplexField& w, ComplexField& wt) {
    std::vector<double> taus(nodes);
    for (int i = 0; i < nodes; ++i) taus[i] = 1.0 + (t - 1.0) * double(i) / (nodes - 1);
    taus.back() = t;
    const std::vector<double> weights = simpson_weights(taus);
    w.assign(grid.size(), {});
    wt.assign(grid.size(), {});
    ComplexField fhat;
    for (int i = 0; i < nodes; ++i) {
      fft.forward_real(forcing(taus[i]), fhat);
      const auto table = propagator::multiplier_table(t, taus[i], ws.cache);
      accumulate_duhamel(w, wt, fhat, weights[i], table, ws.radial);
    }
  };

  int nodes = quad.initial_nodes | 1;  // odd
  ComplexField w0, wt0, w1, wt1;
  integrate(nodes, w0, wt0);
  for (int d = 0; d < quad.max_doublings; ++d) {
    nodes = 2 * nodes - 1;
    integrate(nodes, w1, wt1);
    const double gap = pair_rel_gap(w1, wt1, w0, wt0);
    res.refinement_history.push_back(gap);
    w0.swap(w1);
    wt0.swap(wt1);
    if (gap <= quad.tol) {
      res.converged = true;
      res.rel_error_estimate = gap;
      break;
    }
    res.rel_error_estimate = gap;
  }
  res.state.vhat = std::move(w0);
  res.state.vthat = std::move(wt0);
  if (!res.converged && field_l2(res.state.vhat) == 0.0 && field_l2(res.state.vthat) == 0.0) {
    res.converged = true;  // identically zero forcing never moves
    res.rel_error_estimate = 0.0;
  }
  return res;
}

TimeLattice TimeLattice::geometric(double t_end, int samples) {
  if (!(t_end > 1.0) || samples < 2) {
    throw std::invalid_argument("TimeLattice: need t_end > 1 and >= 2 samples");
  }
  TimeLattice lat;
  lat.times.resize(samples);
  const double gamma = std::pow(t_end, 1.0 / (samples - 1));
  double t = 1.0;
  for (int m = 0; m < samples; ++m) {
    lat.times[m] = t;
    t *= gamma;
  }
  lat.times.front() = 1.0;
  lat.times.back() = t_end;
  return lat;
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.time);
  return out;
}

Trajectory linear_trajectory(const CauchyData& data, const DampingParams& params,
                             const TimeLattice& lattice, PropagatorWorkspace& ws) {
  Trajectory traj;
  traj.forcing = TrajectoryForcing::linear_zero;
  const SpectralState initial = make_initial_state(data, params.epsilon);
  traj.states.reserve(lattice.times.size());
  for (double t : lattice.times) {
    traj.states.push_back(linear_evolve(initial, t, params, &ws));
  }
  return traj;
}

void ensure_forcing(Trajectory& traj, const DampingParams& params) {
  if (traj.forcing == TrajectoryForcing::stored && !traj.forcing_hat.empty()) return;
  traj.forcing_hat.clear();
  traj.forcing_hat.reserve(traj.states.size());
  for (const auto& s : traj.states) {
    traj.forcing_hat.push_back(
        apply_nonlinearity_hat(s.v_physical(), params.p_exponent, s.grid));
  }
  traj.forcing = TrajectoryForcing::stored;
}

Trajectory picard_map(const Trajectory& u, const CauchyData& data, const DampingParams& params,
                      PropagatorWorkspace& ws) {
  if (u.states.empty()) throw std::invalid_argument("picard_map: empty trajectory");
  const GridSpec& grid = u.states.front().grid;
  const std::vector<double> times = u.times();

  // |u|^p spectra at the lattice nodes
  std::vector<ComplexField> fhat(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    fhat[i] = apply_nonlinearity_hat(u.states[i].v_physical(), params.p_exponent, grid);
  }

  Trajectory out;
  out.forcing = TrajectoryForcing::stored;
  out.forcing_hat = fhat;
  out.states.resize(times.size());

  const SpectralState initial = make_initial_state(data, params.epsilon);
  for (std::size_t m = 0; m < times.size(); ++m) {
    SpectralState& sm = out.states[m];
    sm = linear_evolve(initial, times[m], params, &ws);
    if (m == 0) continue;

    const std::span<const double> nodes(times.data(), m + 1);
    const std::vector<double> w_fine = simpson_weights(nodes);
    ComplexField wf(grid.size()), wtf(grid.size());
    std::vector<std::vector<ModeMultipliers>> tables(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      tables[i] = propagator::multiplier_table(times[m], times[i], ws.cache);
      accumulate_duhamel(wf, wtf, fhat[i], w_fine[i], tables[i], ws.radial);
    }

    // one Richardson level against the half-resolution lattice
    if (m >= 2) {
      std::vector<double> coarse_nodes;
      std::vector<std::size_t> coarse_idx;
      for (std::size_t i = 0; i <= m; i += 2) {
        coarse_nodes.push_back(times[i]);
        coarse_idx.push_back(i);
      }
      if (coarse_idx.back() != m) {
        coarse_nodes.push_back(times[m]);
        coarse_idx.push_back(m);
      }
      const std::vector<double> w_coarse = simpson_weights(coarse_nodes);
      ComplexField wc(grid.size()), wtc(grid.size());
      for (std::size_t i = 0; i < coarse_idx.size(); ++i) {
        accumulate_duhamel(wc, wtc, fhat[coarse_idx[i]], w_coarse[i], tables[coarse_idx[i]],
                           ws.radial);
      }
      for (std::size_t k = 0; k < wf.size(); ++k) {
        wf[k] += (wf[k] - wc[k]) / 15.0;
        wtf[k] += (wtf[k] - wtc[k]) / 15.0;
      }
    }
    for (std::size_t k = 0; k < wf.size(); ++k) {
      sm.vhat[k] += wf[k];
      sm.vthat[k] += wtf[k];
    }
  }
  return out;
}

double trajectory_sup_z_diff(const Trajectory& a, const Trajectory& b) {
  if (a.states.size() != b.states.size()) {
    throw std::invalid_argument("trajectory_sup_z_diff: lattice mismatch");
  }
  double best = 0.0;
  for (std::size_t m = 0; m < a.states.size(); ++m) {
    SpectralState diff = a.states[m];
    for (std::size_t k = 0; k < diff.vhat.size(); ++k) {
      diff.vhat[k] -= b.states[m].vhat[k];
      diff.vthat[k] -= b.states[m].vthat[k];
    }
    best = std::max(best, norms::z_norm_u(diff));
  }
  return best;
}

double trajectory_x_norm(const Trajectory& traj, const DampingParams& params,
                         const ContractionParams& cparams) {
  std::vector<norms::TimeSample> samples;
  samples.reserve(traj.states.size());
  for (std::size_t m = 0; m < traj.states.size(); ++m) {
    norms::DerivativeContext ctx{params, nullptr, false};
    if (traj.forcing == TrajectoryForcing::stored) {
      ctx.forcing_hat = &traj.forcing_hat[m];
      ctx.nonlinear = true;
    }
    samples.push_back({&traj.states[m], ctx});
  }
  return norms::x_norm(samples, cparams);
}

Trajectory trajectory_difference(const Trajectory& a, const Trajectory& b) {
  if (a.states.size() != b.states.size() || a.forcing != b.forcing) {
    throw std::invalid_argument("trajectory_difference: incompatible trajectories");
  }
  Trajectory out = a;
  for (std::size_t m = 0; m < out.states.size(); ++m) {
    for (std::size_t k = 0; k < out.states[m].vhat.size(); ++k) {
      out.states[m].vhat[k] -= b.states[m].vhat[k];
      out.states[m].vthat[k] -= b.states[m].vthat[k];
    }
    if (out.forcing == TrajectoryForcing::stored) {
      for (std::size_t k = 0; k < out.forcing_hat[m].size(); ++k) {
        out.forcing_hat[m][k] -= b.forcing_hat[m][k];
      }
    }
  }
  return out;
}

Trajectory solve_semilinear(const CauchyData& data, const DampingParams& params,
                            const TimeLattice& lattice, double tol, int max_iter,
                            ConvergenceReport& report) {
  data.grid.validate_for_final_time(lattice.times.back());
  PropagatorWorkspace ws(params, data.grid);
  report = ConvergenceReport{};

  Trajectory current = linear_trajectory(data, params, lattice, ws);
  for (int k = 0; k < max_iter; ++k) {
    Trajectory next = picard_map(current, data, params, ws);
    const double diff = trajectory_sup_z_diff(next, current);
    report.diffs.push_back(diff);
    if (report.diffs.size() >= 2) {
      const double prev = report.diffs[report.diffs.size() - 2];
      report.ratios.push_back(prev > 0.0 ? diff / prev : 0.0);
    }
    current = std::move(next);
    report.iterations = k + 1;
    if (diff <= tol) {
      report.converged = true;
      break;
    }
    const std::size_t nr = report.ratios.size();
    const bool growing = nr >= 2 && report.ratios[nr - 1] > 1.0 && report.ratios[nr - 2] > 1.0;
    if (!std::isfinite(diff) || diff > 1e8 || (growing && diff > 100.0 * report.diffs.front())) {
      report.diverged = true;
      break;
    }
  }

  if (report.converged) {
    Trajectory once_more = picard_map(current, data, params, ws);
    report.fixed_point_residual = trajectory_sup_z_diff(once_more, current);
  }
  ContractionParams cp(default_eps1(params.p_exponent));
  report.xnorm_final = trajectory_x_norm(current, params, cp);
  return current;
}

}  // namespace epdw::solver
