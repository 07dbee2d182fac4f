// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace hjhalf {

/// One node of a continuous piecewise-linear function.
struct Breakpoint {
  double p;      ///< coordinate in the slope variable
  double value;  ///< function value at p
};

/// Continuous piecewise-linear function on the real line with linear tails.
///
/// Between consecutive breakpoints the function interpolates linearly; left
/// of the first breakpoint it continues with slope left_tail_slope, right of
/// the last with right_tail_slope. Breakpoint coordinates are strictly
/// increasing and there is at least one breakpoint, so the function is
/// continuous by construction. Instances are immutable after construction;
/// every operation below is a pure function, safe to share across threads.
class PLFunction {
 public:
  PLFunction(std::vector<Breakpoint> breakpoints, double left_tail_slope,
             double right_tail_slope);

  double operator()(double p) const;

  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  double left_tail_slope() const { return left_; }
  double right_tail_slope() const { return right_; }
  std::size_t size() const { return bps_.size(); }
  double front_p() const { return bps_.front().p; }
  double back_p() const { return bps_.back().p; }

  /// Slope of segment i, between breakpoints i and i+1. Requires i+1 < size().
  double segment_slope(std::size_t i) const;
  /// Slope of the linear piece covering (p - eps, p).
  double slope_left_of(double p) const;
  /// Slope of the linear piece covering (p, p + eps).
  double slope_right_of(double p) const;

 private:
  std::vector<Breakpoint> bps_;
  double left_;
  double right_;
};

inline double eval(const PLFunction& f, double p) { return f(p); }

/// Unique solution of f(p) = y for strictly monotone f (all segment and tail
/// slopes share one strict sign), found by segment scan plus linear solve.
/// Throws NotMonotoneError otherwise.
double inverse_monotone(const PLFunction& f, double y);

/// The inverse of a strictly monotone PL function as a PL function.
PLFunction inverse_pl(const PLFunction& f);

/// All p where f - g changes sign or touches zero: segment-interior roots,
/// zero nodes, at most one root per transversal tail; endpoints of flat
/// coincidence intervals are both reported. Sorted ascending.
std::vector<double> crossings(const PLFunction& f, const PLFunction& g);

/// Coercive: H -> +inf as |p| -> inf, i.e. left tail slope < 0 < right.
bool check_coercive(const PLFunction& h);
/// Semi-coercive: F -> +inf as p -> -inf, i.e. left tail slope < 0.
bool check_semicoercive(const PLFunction& f);
/// All segment and tail slopes <= 0.
bool is_nonincreasing(const PLFunction& f);
/// All segment and tail slopes < 0.
bool is_strictly_decreasing(const PLFunction& f);

/// Running infimum from the left, H^-(p) = inf over q <= p of H(q).
/// Requires left tail slope <= 0; throws UnboundedError for slope > 0.
/// The result is non-increasing and <= H pointwise.
PLFunction decreasing_envelope(const PLFunction& h);

/// Bardos-LeRoux-Nedelec flux anchored at p0: sup of H over [p, p0] for
/// p <= p0, inf of H over [p0, p] for p >= p0. Requires H coercive; the
/// result is continuous and non-increasing with a flat right tail.
PLFunction bln_flux(const PLFunction& h, double p0);

/// Pointwise difference f - g on the merged breakpoint set.
PLFunction subtract(const PLFunction& f, const PLFunction& g);
/// f + c.
PLFunction shift_value(const PLFunction& f, double c);
/// Drop interior breakpoints where the slope does not change.
PLFunction simplified(const PLFunction& f);
/// Exact comparison of stored breakpoints and tail slopes.
bool exact_equal(const PLFunction& a, const PLFunction& b);

}  // namespace hjhalf
