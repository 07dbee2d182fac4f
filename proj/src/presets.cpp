// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/presets.hpp"

#include "hjhalf/errors.hpp"

namespace hjhalf {

PLFunction preset(const std::string& name) {
  if (name == "W") return PLFunction({{-1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}}, -1.0, 1.0);
  if (name == "V") return PLFunction({{0.0, 0.0}}, -1.0, 1.0);
  if (name == "linear") return PLFunction({{0.0, 0.0}}, -1.0, -1.0);
  if (name == "staircaseF")
    return PLFunction({{-2.0, 2.0}, {-1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}, {2.0, 0.0}}, -1.0, -1.0);
  if (name == "steepF") return PLFunction({{-0.5, 2.0}, {0.0, 0.0}, {1.0, -1.0}}, -10.0, -10.0);
  if (name == "asymF") return PLFunction({{-1.0, 3.0}, {0.0, 0.0}, {2.0, -1.0}}, -4.0, -0.25);
  std::string msg = "unknown preset '" + name + "'; available:";
  for (const auto& n : preset_names()) msg += " " + n;
  throw UnknownPresetError(msg);
}

std::vector<std::string> preset_names() {
  return {"V", "W", "asymF", "linear", "staircaseF", "steepF"};
}

}  // namespace hjhalf
