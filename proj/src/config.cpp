// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hjhalf/csv_io.hpp"
#include "hjhalf/errors.hpp"
#include "hjhalf/presets.hpp"

namespace hjhalf {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

bool known_mode(const std::string& m) {
  return m == "limiter" || m == "testfn" || m == "solve" || m == "converge" || m == "verify";
}

}  // namespace

PLFunction resolve_function(const std::string& name_or_path) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return preset(name_or_path);
  if (std::filesystem::exists(name_or_path)) return read_pl_csv(name_or_path);
  std::string msg = "'" + name_or_path + "' is neither a preset nor a file; presets:";
  for (const auto& n : names) msg += " " + n;
  throw UnknownPresetError(msg);
}

std::function<double(double)> resolve_u0(const std::string& spec) {
  const auto parts = split(spec, ':');
  const auto& kind = parts[0];
  if (kind == "zero" && parts.size() == 1) return [](double) { return 0.0; };
  if (kind == "plane" && parts.size() == 2) {
    const double s = std::stod(parts[1]);
    return [s](double x) { return s * x; };
  }
  if (kind == "neg_abs_sin" && parts.size() == 3) {
    const double a = std::stod(parts[1]);
    const double w = std::stod(parts[2]);
    return [a, w](double x) { return -a * std::abs(std::sin(w * 3.14159265358979323846 * x)); };
  }
  if (kind == "truncated" && parts.size() == 3) {
    const double s = std::stod(parts[1]);
    const double x0 = std::stod(parts[2]);
    return [s, x0](double x) { return std::min(0.0, s * (x - x0)); };
  }
  throw std::invalid_argument(
      "u0 spec '" + spec +
      "' not recognized (zero | plane:<s> | neg_abs_sin:<a>:<f> | truncated:<s>:<x0>)");
}

ParseResult parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult r;
    r.issues.push_back({0, "config", "cannot open '" + path.string() + "'"});
    return r;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

ParseResult parse_config_text(const std::string& text, const std::string& origin) {
  ParseResult result;
  RunConfig cfg;
  std::vector<ConfigIssue>& issues = result.issues;

  std::istringstream in(text);
  std::string line;
  std::string section = "run";
  int lineno = 0;
  auto number = [&](const std::string& val, const std::string& field, double& target) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
      target = v;
    } catch (const std::exception&) {
      issues.push_back({lineno, field, "not a number: '" + val + "'"});
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        issues.push_back({lineno, "section", "malformed section header '" + line + "'"});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "run" && section != "grid" && section != "solve" && section != "testfn" &&
          section != "converge")
        issues.push_back({lineno, "section", "unknown section '" + section + "'"});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      issues.push_back({lineno, "line", "expected key = value, got '" + line + "'"});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string field = section + "." + key;

    if (section == "run") {
      if (key == "hamiltonian") {
        cfg.hamiltonian = val;
      } else if (key == "flux") {
        cfg.flux = val;
      } else if (key == "mode") {
        cfg.mode = val;
        if (!known_mode(val))
          issues.push_back({lineno, field,
                            "unknown mode '" + val +
                                "' (limiter | testfn | solve | converge | verify)"});
      } else if (key == "out_dir") {
        cfg.out_dir = val;
      } else if (key == "seed") {
        try {
          cfg.seed = std::stoull(val);
        } catch (const std::exception&) {
          issues.push_back({lineno, field, "not an integer: '" + val + "'"});
        }
      } else {
        issues.push_back({lineno, field, "unknown key"});
      }
    } else if (section == "grid") {
      if (key == "dx") {
        number(val, field, cfg.grid.dx);
      } else if (key == "L") {
        number(val, field, cfg.grid.L);
      } else if (key == "T_final") {
        number(val, field, cfg.grid.T_final);
      } else if (key == "cfl_factor") {
        number(val, field, cfg.grid.cfl_factor);
      } else if (key == "snapshots") {
        double v = 0;
        number(val, field, v);
        cfg.grid.n_snapshots = static_cast<int>(v);
      } else {
        issues.push_back({lineno, field, "unknown key"});
      }
    } else if (section == "solve") {
      if (key == "u0") {
        cfg.u0 = val;
      } else {
        issues.push_back({lineno, field, "unknown key"});
      }
    } else if (section == "testfn") {
      if (key == "dt") {
        number(val, field, cfg.testfn.dt);
      } else if (key == "T_max") {
        number(val, field, cfg.testfn.t_max);
      } else if (key == "R") {
        number(val, field, cfg.testfn.R);
      } else if (key == "nx") {
        double v = 0;
        number(val, field, v);
        cfg.testfn.nx = static_cast<std::size_t>(v);
      } else if (key == "samples") {
        double v = 0;
        number(val, field, v);
        cfg.testfn.samples.nt = cfg.testfn.samples.nx = static_cast<std::size_t>(v);
      } else {
        issues.push_back({lineno, field, "unknown key"});
      }
    } else if (section == "converge") {
      if (key == "dx_ladder") {
        cfg.dx_ladder.clear();
        for (const auto& item : split(val, ',')) {
          double v = 0;
          number(item, field, v);
          cfg.dx_ladder.push_back(v);
        }
      } else {
        issues.push_back({lineno, field, "unknown key"});
      }
    }
  }

  // cross-field validation (still not fail-fast)
  if (cfg.grid.dx <= 0.0) issues.push_back({0, "grid.dx", "must be positive"});
  if (cfg.grid.L <= 0.0) issues.push_back({0, "grid.L", "must be positive"});
  if (cfg.grid.T_final <= 0.0) issues.push_back({0, "grid.T_final", "must be positive"});
  if (cfg.grid.cfl_factor <= 0.0) issues.push_back({0, "grid.cfl_factor", "must be positive"});
  if (cfg.testfn.dt <= 0.0) issues.push_back({0, "testfn.dt", "must be positive"});
  if (cfg.testfn.R <= 0.0) issues.push_back({0, "testfn.R", "must be positive"});
  for (double v : cfg.dx_ladder)
    if (v <= 0.0) issues.push_back({0, "converge.dx_ladder", "entries must be positive"});
  try {
    resolve_function(cfg.hamiltonian);
  } catch (const std::exception& e) {
    issues.push_back({0, "run.hamiltonian", e.what()});
  }
  try {
    resolve_function(cfg.flux);
  } catch (const std::exception& e) {
    issues.push_back({0, "run.flux", e.what()});
  }
  try {
    resolve_u0(cfg.u0);
  } catch (const std::exception& e) {
    issues.push_back({0, "solve.u0", e.what()});
  }
  (void)origin;
  if (issues.empty()) result.config = std::move(cfg);
  return result;
}

}  // namespace hjhalf
