// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hjhalf/csv_io.hpp"
#include "hjhalf/limiter.hpp"
#include "hjhalf/solver.hpp"
#include "hjhalf/test_function.hpp"

namespace hjhalf {

namespace {

std::string inf_aware(double x) {
  return std::isinf(x) ? (x > 0 ? "inf" : "-inf") : format_sig(x);
}

}  // namespace

int run_limiter_cmd(const RunConfig& config) {
  const PLFunction H = resolve_function(config.hamiltonian);
  const PLFunction F = resolve_function(config.flux);
  std::filesystem::create_directories(config.out_dir);

  const EffectiveFlux ef = effective_flux(H, F);
  {
    std::ofstream out(config.out_dir / "limiter.csv");
    out << "p_alpha,p_minus,p_plus,level\n";
    for (const auto& q : ef.limiter.points)
      out << format_sig(q.p_alpha) << "," << format_sig(q.p_minus) << "," << inf_aware(q.p_plus)
          << "," << format_sig(q.level) << "\n";
  }
  write_pl_csv(config.out_dir / "effective_flux.csv", ef.flux);

  const ValidationReport val = validate_set_limiter(ef.limiter, H);
  double worst_low = 0.0, worst_high = 0.0;
  double lo = std::min(H.front_p(), F.front_p()) - 3.0;
  double hi = std::max(H.back_p(), F.back_p()) + 3.0;
  for (int i = 0; i <= 10000; ++i) {
    const double p = lo + (hi - lo) * i / 10000.0;
    const double v = ef.flux(p);
    worst_low = std::min(worst_low, v - std::min(F(p), H(p)));
    worst_high = std::max(worst_high, v - std::max(F(p), H(p)));
  }
  const bool sandwich_ok = worst_low >= -1e-9 && worst_high <= 1e-9;
  std::ostringstream rep;
  rep << "limiter classification report\n";
  rep << "hamiltonian: " << config.hamiltonian << "\n";
  rep << "flux:        " << config.flux << "\n";
  rep << "plateaus:    " << ef.limiter.points.size() << "\n";
  rep << "validation:  " << (val.valid ? "valid" : "INVALID") << "\n";
  for (const auto& v : val.violations) rep << "  " << v << "\n";
  rep << "sandwich min(F,H) <= F_A <= max(F,H): " << (sandwich_ok ? "holds" : "VIOLATED")
      << " (margins " << format_sig(worst_low) << ", " << format_sig(worst_high) << ")\n";
  write_text(config.out_dir / "report.txt", rep.str());
  return (val.valid && sandwich_ok) ? 0 : 1;
}

int run_testfn_cmd(const RunConfig& config) {
  PLFunction F = resolve_function(config.flux);
  std::filesystem::create_directories(config.out_dir);
  std::string note;
  const double f0 = F(0.0);
  if (std::abs(f0) > 1e-12) {
    F = shift_value(F, -f0);
    note = "flux shifted by " + format_sig(-f0) + " to normalize F(0) = 0\n";
  }
  const BuiltTestFunction built = build_test_function(F, config.testfn);
  const auto& tab = built.tables;

  // node,value tables, downsampled to a bounded row count
  const std::size_t n = tab.etab.E.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 20000);
  {
    std::vector<std::pair<double, double>> rows, frows;
    for (std::size_t i = 0; i < n; i += stride) {
      rows.push_back({tab.etab.t_at(i), tab.etab.E[i]});
      frows.push_back({tab.etab.t_at(i), tab.f[i]});
    }
    write_table_csv(config.out_dir / "E.csv", "t,E", rows);
    write_table_csv(config.out_dir / "f.csv", "t,f", frows);
  }
  {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t j = 0; j < tab.xg.n; ++j) rows.push_back({tab.xg.x_at(j), tab.g[j]});
    write_table_csv(config.out_dir / "g.csv", "x,g", rows);
  }
  std::ostringstream rep;
  rep << note;
  rep << "t_max used: " << format_sig(built.t_max_used)
      << "  (refine retries: " << built.refine_retries << ")\n";
  rep << built.report.to_text();
  write_text(config.out_dir / "phi_check.txt", rep.str());
  return built.report.passed ? 0 : 1;
}

int run_solve_cmd(const RunConfig& config) {
  const PLFunction H = resolve_function(config.hamiltonian);
  const PLFunction Fbc = resolve_function(config.flux);
  std::filesystem::create_directories(config.out_dir);
  const GridSolution sol = solve(H, Fbc, resolve_u0(config.u0), config.grid);
  {
    std::ofstream out(config.out_dir / "solution.csv");
    out << "t,x,u\n";
    for (std::size_t k = 0; k < sol.values.size(); ++k) {
      for (std::size_t i = 0; i < sol.values[k].size(); ++i) {
        out << format_sig(sol.snapshot_times[k]) << ","
            << format_sig(static_cast<double>(i) * sol.dx) << "," << format_sig(sol.values[k][i])
            << "\n";
      }
    }
  }
  std::ostringstream meta;
  meta << "dx = " << format_sig(sol.dx) << "\n";
  meta << "dt = " << format_sig(sol.dt) << "\n";
  meta << "sigma = " << format_sig(sol.sigma) << "\n";
  meta << "cfl = " << format_sig(sol.dt * sol.sigma / sol.dx) << "\n";
  meta << "L = " << format_sig(sol.L) << "\n";
  meta << "n_steps = " << sol.n_steps << "\n";
  write_text(config.out_dir / "meta.txt", meta.str());
  return 0;
}

int run_converge_cmd(const RunConfig& config) {
  const PLFunction H = resolve_function(config.hamiltonian);
  const PLFunction F = resolve_function(config.flux);
  std::filesystem::create_directories(config.out_dir);
  const RefinementTable table =
      compare_runs(H, F, resolve_u0(config.u0), config.dx_ladder, config.grid);
  {
    std::ofstream out(config.out_dir / "rates.csv");
    out << "dx,D,empirical_order\n";
    for (const auto& r : table.rows)
      out << format_sig(r.dx) << "," << format_sig(r.max_diff) << ","
          << format_sig(r.order_vs_prev) << "\n";
    out << "# ls_order=" << format_sig(table.ls_order) << "\n";
    out << "# monotone_nonincreasing=" << (table.monotone_nonincreasing ? 1 : 0) << "\n";
  }
  return 0;
}

}  // namespace hjhalf
