// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// Grid and time-horizon description for a truncated half-line run.
struct GridSpec {
  double dx = 0.025;
  double L = 5.0;
  double T_final = 1.0;
  double cfl_factor = 0.4;
  int n_snapshots = 9;
};

struct SolveOptions {
  std::optional<double> sigma;  ///< dissipation override
  std::optional<double> dt;     ///< explicit step (otherwise cfl_factor * dx / sigma)
  std::optional<long> n_steps;  ///< explicit step count (with dt)
  bool enforce_cfl = true;
  bool auto_extend_L = true;  ///< grow L until sigma * T_final < L / 2
};

/// Space-time solution snapshots with run metadata.
struct GridSolution {
  double dx = 0.0;
  double dt = 0.0;
  double L = 0.0;
  double sigma = 0.0;
  long n_steps = 0;
  std::vector<double> snapshot_times;
  std::vector<std::vector<double>> values;  // values[k][i] at snapshot_times[k]
  std::vector<double> initial;
  PLFunction boundary_flux{{{0.0, 0.0}}, 0.0, 0.0};
  PLFunction hamiltonian{{{0.0, 0.0}}, 0.0, 0.0};
};

/// Lax-Friedrichs numerical Hamiltonian
/// H((p_left + p_right)/2) - (sigma/2)(p_right - p_left); consistent and,
/// for sigma at least the local Lipschitz bound of H, monotone.
double numerical_hamiltonian(double p_left, double p_right, const PLFunction& hamiltonian,
                             double sigma);

/// One explicit step: Lax-Friedrichs in the interior, the boundary flux
/// applied to the forward difference at node 0, one-sided interior update at
/// the last node. Throws CFLViolationError when dt > dx / sigma (unless
/// enforcement is disabled for instability experiments).
std::vector<double> step(const std::vector<double>& state, const PLFunction& hamiltonian,
                         const PLFunction& boundary_flux, double dx, double dt, double sigma,
                         bool enforce_cfl = true);

/// Dissipation covering the slopes reachable from u0 (padded by 1 on each
/// side and by the boundary-flux breakpoints) for both H and the boundary
/// flux.
double default_sigma(const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                     const std::vector<double>& u0, double dx);

GridSolution solve(const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                   const std::function<double(double)>& u0, const GridSpec& grid,
                   const SolveOptions& options = {});

struct RefinementRow {
  double dx = 0.0;
  double max_diff = 0.0;        ///< sup over left-half nodes and snapshots
  double order_vs_prev = 0.0;   ///< log2(D_prev / D); 0 for the first row
};

struct RefinementTable {
  std::vector<RefinementRow> rows;
  double ls_order = 0.0;  ///< least-squares slope of log D against log dx
  bool monotone_nonincreasing = false;
};

/// For each dx, runs the boundary condition F and its effective flux
/// F_{A_F} side by side and records the sup-norm gap over the causally
/// shielded left half of the domain.
RefinementTable compare_runs(const PLFunction& hamiltonian, const PLFunction& flux,
                             const std::function<double(double)>& u0,
                             const std::vector<double>& dx_levels, const GridSpec& base);

struct OrderingReport {
  bool ok = true;
  long first_step = -1;
  long first_node = -1;
  double min_gap = 0.0;  ///< min over steps and nodes of u_high - u_low
};

/// Evolves both states in lockstep and checks min(u_high - u_low) >= -1e-12
/// after every step (the discrete comparison principle of the monotone
/// scheme).
OrderingReport check_ordering(const std::function<double(double)>& u0_low,
                              const std::function<double(double)>& u0_high,
                              const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                              const GridSpec& grid, const SolveOptions& options = {});

}  // namespace hjhalf
