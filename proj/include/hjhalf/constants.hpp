// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hjhalf {

/// Tolerance for comparisons of derived quantities (levels, plateau
/// endpoints, sandwich checks). Breakpoint and tail data are compared
/// exactly.
inline constexpr double kTol = 1e-9;

/// Tight tolerance for structural decisions (degenerate intervals,
/// candidate merging, collinearity).
inline constexpr double kTight = 1e-12;

}  // namespace hjhalf
