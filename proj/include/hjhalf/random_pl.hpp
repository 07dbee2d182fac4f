// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// Knobs for seeded random PL instances. Breakpoint coordinates and values
/// are snapped to multiples of 1/64 so interpolation stays exact in floating
/// point and near-ties cannot arise from rounding noise.
struct PLGenOptions {
  int min_breakpoints = 3;
  int max_breakpoints = 9;
  double coord_range = 5.0;   ///< breakpoints drawn from [-range, range]
  double value_range = 5.0;   ///< values drawn from [-range, range]
  double min_gap = 0.25;      ///< smallest breakpoint spacing
  double min_tail = 0.5;      ///< smallest tail slope magnitude
  double max_tail = 3.0;
  double value_snap = 1.0 / 64.0;  ///< value lattice spacing
};

/// Coercive Hamiltonian: left tail slope < 0 < right tail slope.
PLFunction random_coercive(std::mt19937_64& rng, const PLGenOptions& opts = {});

/// Continuous non-increasing semi-coercive boundary function; flat segments
/// appear with probability flat_prob each.
PLFunction random_nonincreasing_semicoercive(std::mt19937_64& rng, const PLGenOptions& opts = {},
                                             double flat_prob = 0.3);

/// Strictly decreasing flux with F(0) = 0 and both tails negative, admissible
/// for the test-function builder.
PLFunction random_strictly_decreasing_flux(std::mt19937_64& rng, const PLGenOptions& opts = {});

}  // namespace hjhalf
