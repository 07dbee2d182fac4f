// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/random_pl.hpp"

#include <algorithm>
#include <cmath>

namespace hjhalf {

namespace {

double snap64(double x) { return std::round(x * 64.0) / 64.0; }

double snap_to(double x, double grid) { return std::round(x / grid) * grid; }

std::vector<double> random_coords(std::mt19937_64& rng, const PLGenOptions& opts, int k) {
  std::uniform_real_distribution<double> gap(opts.min_gap,
                                             std::max(opts.min_gap * 2.0, 2.0 * opts.coord_range / k));
  std::vector<double> raw(k);
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    acc += gap(rng);
    raw[i] = acc;
  }
  const double center = 0.5 * (raw.front() + raw.back());
  std::vector<double> out;
  out.reserve(k);
  for (double r : raw) {
    double c = snap64(r - center);
    if (!out.empty() && c <= out.back()) c = out.back() + 1.0 / 64.0;
    out.push_back(c);
  }
  return out;
}

double random_tail(std::mt19937_64& rng, const PLGenOptions& opts) {
  std::uniform_real_distribution<double> mag(opts.min_tail, opts.max_tail);
  return snap64(mag(rng));
}

}  // namespace

PLFunction random_coercive(std::mt19937_64& rng, const PLGenOptions& opts) {
  std::uniform_int_distribution<int> nk(opts.min_breakpoints, opts.max_breakpoints);
  const int k = nk(rng);
  const auto coords = random_coords(rng, opts, k);
  std::uniform_real_distribution<double> val(-opts.value_range, opts.value_range);
  std::vector<Breakpoint> bps;
  bps.reserve(k);
  for (int i = 0; i < k; ++i) bps.push_back({coords[i], snap_to(val(rng), opts.value_snap)});
  return PLFunction(std::move(bps), -random_tail(rng, opts), random_tail(rng, opts));
}

PLFunction random_nonincreasing_semicoercive(std::mt19937_64& rng, const PLGenOptions& opts,
                                             double flat_prob) {
  std::uniform_int_distribution<int> nk(opts.min_breakpoints, opts.max_breakpoints);
  const int k = nk(rng);
  const auto coords = random_coords(rng, opts, k);
  std::uniform_real_distribution<double> start(0.0, opts.value_range);
  std::uniform_real_distribution<double> drop(1.0 / 16.0, opts.value_range / 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Breakpoint> bps;
  bps.reserve(k);
  double v = snap_to(start(rng), opts.value_snap);
  for (int i = 0; i < k; ++i) {
    bps.push_back({coords[i], v});
    if (unit(rng) >= flat_prob) v = snap_to(v - drop(rng), opts.value_snap) - opts.value_snap;
  }
  // right tail may be flat (still semi-coercive) or decreasing
  const double right = unit(rng) < flat_prob ? 0.0 : -random_tail(rng, opts);
  return PLFunction(std::move(bps), -random_tail(rng, opts), right);
}

PLFunction random_strictly_decreasing_flux(std::mt19937_64& rng, const PLGenOptions& opts) {
  std::uniform_int_distribution<int> nk(opts.min_breakpoints, opts.max_breakpoints);
  const int k = nk(rng);
  const auto coords = random_coords(rng, opts, k);
  std::uniform_real_distribution<double> drop(1.0 / 16.0, opts.value_range / 2.0);
  std::vector<Breakpoint> bps;
  bps.reserve(k);
  double v = 0.0;
  for (int i = 0; i < k; ++i) {
    bps.push_back({coords[i], v});
    double d = snap_to(drop(rng), opts.value_snap);
    if (d <= 0.0) d = opts.value_snap;
    v -= d;
  }
  PLFunction f(std::move(bps), -random_tail(rng, opts), -random_tail(rng, opts));
  // normalize to F(0) = 0; the shift keeps values dyadic when f(0) is dyadic
  return shift_value(f, -f(0.0));
}

}  // namespace hjhalf
