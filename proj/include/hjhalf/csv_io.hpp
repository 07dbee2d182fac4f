// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hjhalf/pl_function.hpp"

namespace hjhalf {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_exact(double x);
/// Fixed 15-significant-digit formatting for report output.
std::string format_sig(double x);

/// PLFunction on disk: two '#' metadata lines carrying the tail slopes, a
/// "p,value" header, then one breakpoint per row. Numbers round-trip exactly.
void write_pl_csv(const std::filesystem::path& path, const PLFunction& f);
PLFunction read_pl_csv(const std::filesystem::path& path);

/// Two-column table with an arbitrary header line.
void write_table_csv(const std::filesystem::path& path, const std::string& header,
                     const std::vector<std::pair<double, double>>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hjhalf
