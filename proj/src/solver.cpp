// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hjhalf/constants.hpp"
#include "hjhalf/errors.hpp"
#include "hjhalf/limiter.hpp"

namespace hjhalf {

double numerical_hamiltonian(double p_left, double p_right, const PLFunction& hamiltonian,
                             double sigma) {
  return hamiltonian(0.5 * (p_left + p_right)) - 0.5 * sigma * (p_right - p_left);
}

namespace {

void check_cfl(double dx, double dt, double sigma, bool enforce) {
  if (enforce && dt * sigma > dx * (1.0 + 1e-12))
    throw CFLViolationError("step: dt exceeds the monotonicity bound dx / sigma");
}

void step_inplace(std::vector<double>& next, const std::vector<double>& cur,
                  const PLFunction& H, const PLFunction& F, double dx, double dt, double sigma) {
  const std::size_t n = cur.size() - 1;
  next[0] = cur[0] - dt * F((cur[1] - cur[0]) / dx);
  for (std::size_t i = 1; i < n; ++i) {
    const double pl = (cur[i] - cur[i - 1]) / dx;
    const double pr = (cur[i + 1] - cur[i]) / dx;
    next[i] = cur[i] - dt * (H(0.5 * (pl + pr)) - 0.5 * sigma * (pr - pl));
  }
  next[n] = cur[n] - dt * H((cur[n] - cur[n - 1]) / dx);
}

// largest |slope| of f over [lo, hi]
double max_abs_slope(const PLFunction& f, double lo, double hi) {
  double m = 0.0;
  if (lo < f.front_p()) m = std::max(m, std::abs(f.left_tail_slope()));
  if (hi > f.back_p()) m = std::max(m, std::abs(f.right_tail_slope()));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (f.breakpoints()[i + 1].p > lo && f.breakpoints()[i].p < hi)
      m = std::max(m, std::abs(f.segment_slope(i)));
  }
  return m;
}

std::vector<double> sample(const std::function<double(double)>& u0, std::size_t n_nodes,
                           double dx) {
  std::vector<double> u(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) u[i] = u0(static_cast<double>(i) * dx);
  return u;
}

}  // namespace

std::vector<double> step(const std::vector<double>& state, const PLFunction& hamiltonian,
                         const PLFunction& boundary_flux, double dx, double dt, double sigma,
                         bool enforce_cfl) {
  if (state.size() < 3) throw std::invalid_argument("step: need at least 3 nodes");
  check_cfl(dx, dt, sigma, enforce_cfl);
  std::vector<double> next(state.size());
  step_inplace(next, state, hamiltonian, boundary_flux, dx, dt, sigma);
  return next;
}

double default_sigma(const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                     const std::vector<double>& u0, double dx) {
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i + 1 < u0.size(); ++i) {
    const double s = (u0[i + 1] - u0[i]) / dx;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  lo -= 1.0;
  hi += 1.0;
  // boundary-generated slopes stay within the flux's plateau structure
  lo = std::min(lo, boundary_flux.front_p());
  hi = std::max(hi, boundary_flux.back_p());
  return std::max(max_abs_slope(hamiltonian, lo, hi), max_abs_slope(boundary_flux, lo, hi));
}

GridSolution solve(const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                   const std::function<double(double)>& u0, const GridSpec& grid,
                   const SolveOptions& options) {
  if (grid.dx <= 0.0 || grid.L <= 0.0 || grid.T_final <= 0.0)
    throw std::invalid_argument("solve: grid parameters must be positive");
  GridSolution out;
  out.dx = grid.dx;
  out.hamiltonian = hamiltonian;
  out.boundary_flux = boundary_flux;

  // probe sigma on the requested domain first, then extend so waves from the
  // artificial right boundary cannot reach the left half
  std::size_t n_nodes = static_cast<std::size_t>(std::llround(grid.L / grid.dx)) + 1;
  std::vector<double> u = sample(u0, n_nodes, grid.dx);
  const double sigma =
      options.sigma ? *options.sigma : default_sigma(hamiltonian, boundary_flux, u, grid.dx);
  out.sigma = sigma;
  double L = (n_nodes - 1) * grid.dx;
  if (options.auto_extend_L && sigma * grid.T_final >= L / 2.0) {
    L = 2.0 * sigma * grid.T_final + 2.0 * grid.dx;
    n_nodes = static_cast<std::size_t>(std::ceil(L / grid.dx)) + 1;
    u = sample(u0, n_nodes, grid.dx);
  }
  out.L = static_cast<double>(n_nodes - 1) * grid.dx;
  out.initial = u;

  long n_steps;
  double dt;
  if (options.dt) {
    dt = *options.dt;
    n_steps = options.n_steps ? *options.n_steps
                              : static_cast<long>(std::ceil(grid.T_final / dt - 1e-12));
  } else {
    const double dt0 = grid.cfl_factor * grid.dx / sigma;
    n_steps = static_cast<long>(std::ceil(grid.T_final / dt0 - 1e-12));
    n_steps = std::max<long>(n_steps, 1);
    dt = grid.T_final / static_cast<double>(n_steps);
  }
  check_cfl(grid.dx, dt, sigma, options.enforce_cfl);
  out.dt = dt;
  out.n_steps = n_steps;

  const int n_snap = std::max(2, grid.n_snapshots);
  std::vector<long> snap_steps;
  for (int k = 0; k < n_snap; ++k)
    snap_steps.push_back(static_cast<long>(std::llround(
        static_cast<double>(k) * static_cast<double>(n_steps) / (n_snap - 1))));
  snap_steps.erase(std::unique(snap_steps.begin(), snap_steps.end()), snap_steps.end());

  std::vector<double> buf(u.size());
  std::size_t snap_idx = 0;
  for (long s = 0; s <= n_steps; ++s) {
    if (snap_idx < snap_steps.size() && s == snap_steps[snap_idx]) {
      out.snapshot_times.push_back(static_cast<double>(s) * dt);
      out.values.push_back(u);
      ++snap_idx;
    }
    if (s == n_steps) break;
    step_inplace(buf, u, hamiltonian, boundary_flux, grid.dx, dt, sigma);
    u.swap(buf);
  }
  return out;
}

RefinementTable compare_runs(const PLFunction& hamiltonian, const PLFunction& flux,
                             const std::function<double(double)>& u0,
                             const std::vector<double>& dx_levels, const GridSpec& base) {
  const PLFunction limited = effective_flux(hamiltonian, flux).flux;
  RefinementTable table;
  for (double dx : dx_levels) {
    GridSpec g = base;
    g.dx = dx;
    // shared dissipation so both runs live on the same time grid
    const std::size_t n_probe = static_cast<std::size_t>(std::llround(g.L / dx)) + 1;
    std::vector<double> probe(n_probe);
    for (std::size_t i = 0; i < n_probe; ++i) probe[i] = u0(static_cast<double>(i) * dx);
    SolveOptions opt;
    opt.sigma = std::max(default_sigma(hamiltonian, flux, probe, dx),
                         default_sigma(hamiltonian, limited, probe, dx));
    const GridSolution a = solve(hamiltonian, flux, u0, g, opt);
    const GridSolution b = solve(hamiltonian, limited, u0, g, opt);
    double diff = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      const std::size_t half = a.values[k].size() / 2;
      for (std::size_t i = 0; i <= half; ++i)
        diff = std::max(diff, std::abs(a.values[k][i] - b.values[k][i]));
    }
    RefinementRow row{dx, diff, 0.0};
    if (!table.rows.empty())
      row.order_vs_prev = std::log2(table.rows.back().max_diff / std::max(diff, 1e-300));
    table.rows.push_back(row);
  }
  table.monotone_nonincreasing = true;
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
    if (table.rows[i + 1].max_diff > table.rows[i].max_diff + kTight)
      table.monotone_nonincreasing = false;
  // least-squares slope of log D on log dx
  const std::size_t n = table.rows.size();
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : table.rows) {
      const double x = std::log(r.dx);
      const double y = std::log(std::max(r.max_diff, 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double dn = static_cast<double>(n);
    table.ls_order = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  }
  return table;
}

namespace {

// one causal-cone step: nodes 0..active receive the interior/left-boundary
// update; nodes beyond active are never read again by any node that still
// matters, so the artificial truncation edge never acts
void cone_step(std::vector<double>& next, const std::vector<double>& cur, std::size_t active,
               const PLFunction& H, const PLFunction& F, double dx, double dt, double sigma) {
  next[0] = cur[0] - dt * F((cur[1] - cur[0]) / dx);
  for (std::size_t i = 1; i <= active; ++i) {
    const double pl = (cur[i] - cur[i - 1]) / dx;
    const double pr = (cur[i + 1] - cur[i]) / dx;
    next[i] = cur[i] - dt * (H(0.5 * (pl + pr)) - 0.5 * sigma * (pr - pl));
  }
}

}  // namespace

OrderingReport check_ordering(const std::function<double(double)>& u0_low,
                              const std::function<double(double)>& u0_high,
                              const PLFunction& hamiltonian, const PLFunction& boundary_flux,
                              const GridSpec& grid, const SolveOptions& options) {
  const std::size_t n_keep = static_cast<std::size_t>(std::llround(grid.L / grid.dx)) + 1;

  // probe sigma and the step count on the requested window first
  std::vector<double> probe_lo(n_keep), probe_hi(n_keep);
  for (std::size_t i = 0; i < n_keep; ++i) {
    const double x = static_cast<double>(i) * grid.dx;
    probe_lo[i] = u0_low(x);
    probe_hi[i] = u0_high(x);
  }
  double sigma;
  if (options.sigma) {
    sigma = *options.sigma;
  } else {
    sigma = std::max(default_sigma(hamiltonian, boundary_flux, probe_lo, grid.dx),
                     default_sigma(hamiltonian, boundary_flux, probe_hi, grid.dx));
  }
  double dt;
  long n_steps;
  if (options.dt) {
    dt = *options.dt;
    n_steps = options.n_steps ? *options.n_steps
                              : static_cast<long>(std::ceil(grid.T_final / dt - 1e-12));
  } else {
    const double dt0 = grid.cfl_factor * grid.dx / sigma;
    n_steps = std::max<long>(1, static_cast<long>(std::ceil(grid.T_final / dt0 - 1e-12)));
    dt = grid.T_final / static_cast<double>(n_steps);
  }
  check_cfl(grid.dx, dt, sigma, options.enforce_cfl);

  // the domain shrinks by one node per step, so every scanned node carries
  // the exact half-line solution values for the whole run
  const std::size_t n_nodes = n_keep + static_cast<std::size_t>(n_steps) + 1;
  std::vector<double> lo(n_nodes), hi(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const double x = static_cast<double>(i) * grid.dx;
    lo[i] = u0_low(x);
    hi[i] = u0_high(x);
    if (lo[i] > hi[i])
      throw std::invalid_argument("check_ordering: initial data must satisfy u0_low <= u0_high");
  }

  OrderingReport rep;
  rep.min_gap = 1e300;
  std::vector<double> buf_lo = lo, buf_hi = hi;
  for (long s = 1; s <= n_steps; ++s) {
    const std::size_t active = n_nodes - 2 - static_cast<std::size_t>(s - 1);
    cone_step(buf_lo, lo, active, hamiltonian, boundary_flux, grid.dx, dt, sigma);
    lo.swap(buf_lo);
    cone_step(buf_hi, hi, active, hamiltonian, boundary_flux, grid.dx, dt, sigma);
    hi.swap(buf_hi);
    for (std::size_t i = 0; i <= active; ++i) {
      const double gap = hi[i] - lo[i];
      if (gap < rep.min_gap) rep.min_gap = gap;
      if (gap < -1e-12 && rep.ok) {
        rep.ok = false;
        rep.first_step = s;
        rep.first_node = static_cast<long>(i);
      }
    }
    if (!rep.ok && !std::isfinite(rep.min_gap)) break;  // blown up, nothing more to learn
  }
  return rep;
}

}  // namespace hjhalf
