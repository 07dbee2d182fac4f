// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// The bracketing slopes of p at its own H-level:
///   p_minus = sup{ q < p : H(q) >= H(p) },
///   p_plus  = inf{ q > p : H(q) <= H(p) }, with inf of the empty set = +inf.
/// H equals H(p) at both bounds; strictly below (above) the level holds on
/// (p_minus, p) (resp. (p, p_plus)).
struct SlopeBounds {
  double p_minus;
  double p_plus;  ///< may be +infinity
};

/// One limiter point with its plateau interval and level.
struct LimiterPoint {
  double p_alpha;
  double p_minus;
  double p_plus;  ///< may be +infinity (right-unbounded plateau)
  double level;   ///< H(p_alpha)
};

/// Finite ordered set limiter: plateau intervals [p_minus, p_plus] with
/// non-increasing levels and pairwise disjoint open interiors.
struct SetLimiter {
  std::vector<LimiterPoint> points;  ///< sorted by p_alpha
};

/// A-limited flux function together with the limiter that produced it. The
/// flux equals the plateau level on each [p_minus, p_plus] and H elsewhere;
/// it is continuous and non-increasing.
struct EffectiveFlux {
  PLFunction flux;
  SetLimiter limiter;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Exact p_minus / p_plus by scanning PL segments for level crossings of
/// H(p). Requires H coercive (throws NotCoerciveError).
SlopeBounds slope_bounds(const PLFunction& hamiltonian, double p);

/// Checks the three set-limiter conditions: nondegenerate plateaus,
/// non-increasing levels, and covering of every (p_minus, p) / (p, p_plus)
/// gap by some plateau. Covering is decided on a finite candidate set (H
/// breakpoints, plateau endpoints, gap midpoints, and points beyond the
/// breakpoint range).
ValidationReport validate_set_limiter(const SetLimiter& limiter, const PLFunction& hamiltonian);

/// The A-limited flux: plateau level on each [p_minus, p_plus], H elsewhere.
/// Throws InvalidLimiterError when validation fails.
EffectiveFlux build_flux(const SetLimiter& limiter, const PLFunction& hamiltonian);

/// The unique set limiter A_F of a continuous non-increasing semi-coercive
/// boundary function F against a coercive H. Candidates are breakpoints of H
/// and F plus the crossings of F - H; between consecutive candidates the sign
/// of F - H and the monotonicity of H are constant, so the quantified
/// membership conditions are decided over the candidate set. Candidates
/// sharing a plateau collapse to the representative with minimal |p_alpha|.
SetLimiter compute_set_limiter(const PLFunction& hamiltonian, const PLFunction& flux);

/// Sampling parameters for the brute-force oracle.
struct OracleGrid {
  double lo;
  double hi;
  double step;
};

/// Brute-force reference for compute_set_limiter: applies the membership
/// conditions literally at every grid point, quantifying over grid points.
/// Test-only; plateau endpoints are accurate to about 2*step.
SetLimiter oracle_set_limiter(const PLFunction& hamiltonian, const PLFunction& flux,
                              const OracleGrid& grid);

/// The state-constraint limiter A0: points with p_minus = p < p_plus whose
/// plateau (p, p_plus) meets no lower H-level plateau. Satisfies
/// build_flux(A0, H) = decreasing_envelope(H).
SetLimiter compute_A0(const PLFunction& hamiltonian);

/// build_flux(compute_set_limiter(H, F), H); satisfies
/// min(F,H) <= flux <= max(F,H) pointwise.
EffectiveFlux effective_flux(const PLFunction& hamiltonian, const PLFunction& flux);

/// True when both limiters carry the same plateaus and levels within tol.
/// Representatives p_alpha are not compared: the flux depends only on the
/// plateau and its level.
bool same_plateaus(const SetLimiter& a, const SetLimiter& b, double tol);

}  // namespace hjhalf
