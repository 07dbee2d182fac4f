// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// Named reference functions used throughout the CLI and test suites.
///
///   W          two-minimum coercive Hamiltonian, breakpoints (-1,0),(0,1),(1,0)
///   V          convex |p|
///   linear     boundary flux F(p) = -p
///   staircaseF non-increasing flux with two flat parts (not strictly decreasing)
///   steepF     strictly decreasing flux with tail slopes of magnitude 10
///   asymF      strictly decreasing flux with widely differing tail slopes
///
/// Throws UnknownPresetError for other names.
PLFunction preset(const std::string& name);

/// Names accepted by preset(), sorted.
std::vector<std::string> preset_names();

}  // namespace hjhalf
