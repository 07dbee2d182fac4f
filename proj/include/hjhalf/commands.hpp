// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hjhalf/config.hpp"

namespace hjhalf {

/// Subcommand runners: each writes its artifacts into config.out_dir and
/// returns the process exit code (0 success, 1 verification failure).
int run_limiter_cmd(const RunConfig& config);
int run_testfn_cmd(const RunConfig& config);
int run_solve_cmd(const RunConfig& config);
int run_converge_cmd(const RunConfig& config);

}  // namespace hjhalf
