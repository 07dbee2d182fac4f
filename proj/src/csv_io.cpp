// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hjhalf {

std::string format_exact(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_sig(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::string(buf);
}

void write_pl_csv(const std::filesystem::path& path, const PLFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "# left_tail_slope=" << format_exact(f.left_tail_slope()) << "\n";
  out << "# right_tail_slope=" << format_exact(f.right_tail_slope()) << "\n";
  out << "p,value\n";
  for (const auto& b : f.breakpoints())
    out << format_exact(b.p) << "," << format_exact(b.value) << "\n";
}

namespace {

double parse_double(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("bad number '" + s + "' in " + context);
  }
}

}  // namespace

PLFunction read_pl_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  double left = 0.0, right = 0.0;
  bool have_left = false, have_right = false, have_header = false;
  std::vector<Breakpoint> bps;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      const std::string val = line.substr(eq + 1);
      if (key == "left_tail_slope") {
        left = parse_double(val, path.string());
        have_left = true;
      } else if (key == "right_tail_slope") {
        right = parse_double(val, path.string());
        have_right = true;
      }
      continue;
    }
    if (!have_header) {
      have_header = true;  // "p,value"
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed row '" + line + "' in " + path.string());
    bps.push_back({parse_double(line.substr(0, comma), path.string()),
                   parse_double(line.substr(comma + 1), path.string())});
  }
  if (!have_left || !have_right)
    throw std::runtime_error("missing tail slope metadata in " + path.string());
  if (bps.empty()) throw std::runtime_error("no breakpoints in " + path.string());
  return PLFunction(std::move(bps), left, right);
}

void write_table_csv(const std::filesystem::path& path, const std::string& header,
                     const std::vector<std::pair<double, double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << header << "\n";
  for (const auto& [a, b] : rows) out << format_sig(a) << "," << format_sig(b) << "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
}

}  // namespace hjhalf
