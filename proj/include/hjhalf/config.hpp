// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hjhalf/solver.hpp"
#include "hjhalf/test_function.hpp"

namespace hjhalf {

/// Declarative experiment description read from a flat key-value file with
/// section headers. Unset keys keep their defaults.
struct RunConfig {
  std::string hamiltonian = "W";  ///< preset name or PLFunction CSV path
  std::string flux = "linear";    ///< preset name or PLFunction CSV path
  std::string mode;               ///< optional; the CLI subcommand wins
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 0;
  GridSpec grid;
  std::string u0 = "zero";  ///< zero | plane:<s> | neg_abs_sin:<a>:<f> | truncated:<s>:<x0>
  TestFnParams testfn;
  std::vector<double> dx_ladder = {1.0 / 40.0, 1.0 / 80.0, 1.0 / 160.0, 1.0 / 320.0};
};

struct ConfigIssue {
  int line = 0;
  std::string field;
  std::string message;
};

/// Either a validated config or the full list of problems (not fail-fast).
struct ParseResult {
  std::optional<RunConfig> config;
  std::vector<ConfigIssue> issues;
};

ParseResult parse_config(const std::filesystem::path& path);
ParseResult parse_config_text(const std::string& text, const std::string& origin);

/// Preset name, otherwise a PLFunction CSV on disk.
PLFunction resolve_function(const std::string& name_or_path);

/// Initial-datum spec parser; throws std::invalid_argument on bad specs.
std::function<double(double)> resolve_u0(const std::string& spec);

}  // namespace hjhalf
