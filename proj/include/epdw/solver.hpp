// Field-level evolution on the periodic grid: exact linear propagation via
// the Psi multipliers, Duhamel integration of forcing, the dealiased |u|^p
// nonlinearity and the Picard iteration of the nonlinear map.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "epdw/grid.hpp"
#include "epdw/norms.hpp"
#include "epdw/params.hpp"
#include "epdw/propagator.hpp"
#include "epdw/state.hpp"

namespace epdw::solver {

// Radial shell index plus the per-run Bessel table cache; the solver calls
// the propagator once per shell instead of once per mode.
struct PropagatorWorkspace {
  RadialIndex radial;
  propagator::JTableCache cache;

  PropagatorWorkspace(const DampingParams& params, const GridSpec& grid)
      : radial(RadialIndex::build(grid)), cache(params, radial.magnitudes) {}
};

// Exact per-mode propagation of (vhat, dt vhat) from state.time to t_new.
SpectralState linear_evolve(const SpectralState& state, double t_new, const DampingParams& params,
                            PropagatorWorkspace* ws = nullptr);

// |u(x)|^p evaluated on a 2x zero-padded grid and truncated back.
RealField apply_nonlinearity(const RealField& u, double p, const GridSpec& grid);
ComplexField apply_nonlinearity_hat(const RealField& u, double p, const GridSpec& grid);

struct QuadSpec {
  double tol = 1e-7;
  int max_doublings = 8;
  int initial_nodes = 9;
};

struct DuhamelResult {
  SpectralState state;                    // (w, dt w) at t
  double rel_error_estimate = 0.0;        // from the last node doubling
  std::vector<double> refinement_history; // relative change per doubling
  bool converged = false;
};

// w(t) = int_1^t Psi_1(t, tau, D) F(tau, .) dtau with adaptive node-doubled
// Simpson quadrature; forcing supplies the physical field at any tau.
DuhamelResult duhamel(const std::function<RealField(double)>& forcing, const GridSpec& grid,
                      const DampingParams& params, double t, const QuadSpec& quad = {});

struct TimeLattice {
  std::vector<double> times;  // geometric, times.front() = 1

  static TimeLattice geometric(double t_end, int samples = 40);
};

enum class TrajectoryForcing { linear_zero, stored };

struct Trajectory {
  std::vector<SpectralState> states;  // one per lattice node
  // Spectra of the forcing in the equation this trajectory satisfies;
  // meaningful when forcing == stored.
  std::vector<ComplexField> forcing_hat;
  TrajectoryForcing forcing = TrajectoryForcing::linear_zero;

  std::vector<double> times() const;
};

// Linear solution from eps-scaled bump data sampled on the lattice.
Trajectory linear_trajectory(const CauchyData& data, const DampingParams& params,
                             const TimeLattice& lattice, PropagatorWorkspace& ws);

// One application of the nonlinear map: eps-scaled linear part plus the
// Duhamel integral of |u|^p over the lattice nodes (composite Simpson on the
// geometric lattice with one Richardson extrapolation level).
Trajectory picard_map(const Trajectory& u, const CauchyData& data, const DampingParams& params,
                      PropagatorWorkspace& ws);

// sup over lattice nodes of || (a - b)(t_m) ||_{Z,1,2}.
double trajectory_sup_z_diff(const Trajectory& a, const Trajectory& b);

double trajectory_x_norm(const Trajectory& traj, const DampingParams& params,
                         const ContractionParams& cparams);

// Difference trajectory (states and stored forcing subtract component-wise).
Trajectory trajectory_difference(const Trajectory& a, const Trajectory& b);

// Defines the |u|^p forcing spectra from the trajectory's own states.
void ensure_forcing(Trajectory& traj, const DampingParams& params);

struct ConvergenceReport {
  bool converged = false;
  bool diverged = false;
  int iterations = 0;
  std::vector<double> diffs;   // sup_m ||u^{k+1} - u^k||_{Z,1,2}
  std::vector<double> ratios;  // diffs[k] / diffs[k-1]
  double xnorm_final = 0.0;
  double fixed_point_residual = 0.0;
};

// Picard iteration u <- N u from the linear solution until the sup-Z-norm
// update drops below tol (or max_iter / divergence).
Trajectory solve_semilinear(const CauchyData& data, const DampingParams& params,
                            const TimeLattice& lattice, double tol, int max_iter,
                            ConvergenceReport& report);

// Quadrature weights of the composite Simpson rule on arbitrary ordered
// nodes (trailing odd interval handled by a one-sided quadratic).
std::vector<double> simpson_weights(std::span<const double> nodes);

}  // namespace epdw::solver
