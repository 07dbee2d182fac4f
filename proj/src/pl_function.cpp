// SPDX-License-Identifier: Apache-2.0
#include "hjhalf/pl_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hjhalf/constants.hpp"
#include "hjhalf/errors.hpp"

namespace hjhalf {

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints, double left_tail_slope,
                       double right_tail_slope)
    : bps_(std::move(breakpoints)), left_(left_tail_slope), right_(right_tail_slope) {
  if (bps_.empty()) throw std::invalid_argument("PLFunction: needs at least one breakpoint");
  for (std::size_t i = 0; i + 1 < bps_.size(); ++i) {
    if (!(bps_[i].p < bps_[i + 1].p))
      throw std::invalid_argument("PLFunction: breakpoint coordinates must be strictly increasing");
  }
  for (const auto& b : bps_) {
    if (!std::isfinite(b.p) || !std::isfinite(b.value))
      throw std::invalid_argument("PLFunction: breakpoints must be finite");
  }
  if (!std::isfinite(left_) || !std::isfinite(right_))
    throw std::invalid_argument("PLFunction: tail slopes must be finite");
}

double PLFunction::operator()(double p) const {
  if (p <= bps_.front().p) return bps_.front().value + left_ * (p - bps_.front().p);
  if (p >= bps_.back().p) return bps_.back().value + right_ * (p - bps_.back().p);
  auto it = std::upper_bound(bps_.begin(), bps_.end(), p,
                             [](double x, const Breakpoint& b) { return x < b.p; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double s = (hi.value - lo.value) / (hi.p - lo.p);
  return lo.value + s * (p - lo.p);
}

double PLFunction::segment_slope(std::size_t i) const {
  return (bps_[i + 1].value - bps_[i].value) / (bps_[i + 1].p - bps_[i].p);
}

double PLFunction::slope_left_of(double p) const {
  if (p <= bps_.front().p) return left_;
  if (p > bps_.back().p) return right_;
  // first breakpoint with coordinate >= p; the piece just left of p lives in
  // the segment ending there (or at p itself when p is interior).
  auto it = std::lower_bound(bps_.begin(), bps_.end(), p,
                             [](const Breakpoint& b, double x) { return b.p < x; });
  std::size_t j = static_cast<std::size_t>(it - bps_.begin());
  return segment_slope(j - 1);
}

double PLFunction::slope_right_of(double p) const {
  if (p < bps_.front().p) return left_;
  if (p >= bps_.back().p) return right_;
  auto it = std::upper_bound(bps_.begin(), bps_.end(), p,
                             [](double x, const Breakpoint& b) { return x < b.p; });
  std::size_t j = static_cast<std::size_t>(it - bps_.begin());
  return segment_slope(j - 1);
}

namespace {

// All slopes of f in order: left tail, segments, right tail.
std::vector<double> all_slopes(const PLFunction& f) {
  std::vector<double> s;
  s.reserve(f.size() + 1);
  s.push_back(f.left_tail_slope());
  for (std::size_t i = 0; i + 1 < f.size(); ++i) s.push_back(f.segment_slope(i));
  s.push_back(f.right_tail_slope());
  return s;
}

}  // namespace

double inverse_monotone(const PLFunction& f, double y) {
  const auto slopes = all_slopes(f);
  const bool increasing = slopes.front() > 0.0;
  for (double s : slopes) {
    if (s == 0.0 || (s > 0.0) != increasing)
      throw NotMonotoneError("inverse_monotone: function is not strictly monotone");
  }
  const auto& bps = f.breakpoints();
  if (increasing) {
    if (y <= bps.front().value)
      return bps.front().p + (y - bps.front().value) / f.left_tail_slope();
    if (y >= bps.back().value)
      return bps.back().p + (y - bps.back().value) / f.right_tail_slope();
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      if (y <= bps[i + 1].value)
        return bps[i].p + (y - bps[i].value) / f.segment_slope(i);
    }
  } else {
    if (y >= bps.front().value)
      return bps.front().p + (y - bps.front().value) / f.left_tail_slope();
    if (y <= bps.back().value)
      return bps.back().p + (y - bps.back().value) / f.right_tail_slope();
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      if (y >= bps[i + 1].value)
        return bps[i].p + (y - bps[i].value) / f.segment_slope(i);
    }
  }
  return bps.back().p;  // unreachable
}

PLFunction inverse_pl(const PLFunction& f) {
  const auto slopes = all_slopes(f);
  const bool increasing = slopes.front() > 0.0;
  for (double s : slopes) {
    if (s == 0.0 || (s > 0.0) != increasing)
      throw NotMonotoneError("inverse_pl: function is not strictly monotone");
  }
  const auto& bps = f.breakpoints();
  std::vector<Breakpoint> inv;
  inv.reserve(bps.size());
  if (increasing) {
    for (const auto& b : bps) inv.push_back({b.value, b.p});
    return PLFunction(std::move(inv), 1.0 / f.left_tail_slope(), 1.0 / f.right_tail_slope());
  }
  for (auto it = bps.rbegin(); it != bps.rend(); ++it) inv.push_back({it->value, it->p});
  // for decreasing f, y below the last value maps to the right tail of f
  return PLFunction(std::move(inv), 1.0 / f.right_tail_slope(), 1.0 / f.left_tail_slope());
}

PLFunction subtract(const PLFunction& f, const PLFunction& g) {
  std::vector<double> coords;
  coords.reserve(f.size() + g.size());
  for (const auto& b : f.breakpoints()) coords.push_back(b.p);
  for (const auto& b : g.breakpoints()) coords.push_back(b.p);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  std::vector<Breakpoint> out;
  out.reserve(coords.size());
  for (double p : coords) out.push_back({p, f(p) - g(p)});
  return PLFunction(std::move(out), f.left_tail_slope() - g.left_tail_slope(),
                    f.right_tail_slope() - g.right_tail_slope());
}

PLFunction shift_value(const PLFunction& f, double c) {
  auto bps = f.breakpoints();
  for (auto& b : bps) b.value += c;
  return PLFunction(std::move(bps), f.left_tail_slope(), f.right_tail_slope());
}

PLFunction simplified(const PLFunction& f) {
  if (f.size() <= 1) return f;
  const auto& bps = f.breakpoints();
  std::vector<Breakpoint> out;
  out.push_back(bps.front());
  double slope_in = f.left_tail_slope();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double s = f.segment_slope(i);
    if (std::abs(s - slope_in) > kTight * std::max({1.0, std::abs(s), std::abs(slope_in)})) {
      if (out.back().p != bps[i].p) out.push_back(bps[i]);
      slope_in = s;
    } else {
      slope_in = s;
    }
  }
  if (out.back().p != bps.back().p) {
    if (std::abs(f.right_tail_slope() - slope_in) >
        kTight * std::max({1.0, std::abs(slope_in), std::abs(f.right_tail_slope())}))
      out.push_back(bps.back());
  }
  // keep the last node when everything collapsed onto the first
  if (out.size() == 1 && bps.size() > 1 &&
      std::abs(f.left_tail_slope() - f.right_tail_slope()) > kTight) {
    out.push_back(bps.back());
  }
  return PLFunction(std::move(out), f.left_tail_slope(), f.right_tail_slope());
}

bool exact_equal(const PLFunction& a, const PLFunction& b) {
  if (a.size() != b.size()) return false;
  if (a.left_tail_slope() != b.left_tail_slope()) return false;
  if (a.right_tail_slope() != b.right_tail_slope()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.breakpoints()[i].p != b.breakpoints()[i].p) return false;
    if (a.breakpoints()[i].value != b.breakpoints()[i].value) return false;
  }
  return true;
}

std::vector<double> crossings(const PLFunction& f, const PLFunction& g) {
  const PLFunction d = subtract(f, g);
  const auto& bps = d.breakpoints();
  const auto scale = [&](double p) {
    return kTight * std::max({1.0, std::abs(f(p)), std::abs(g(p))});
  };
  std::vector<double> roots;
  auto is_zero = [&](std::size_t i) { return std::abs(bps[i].value) <= scale(bps[i].p); };

  // left tail: one root if the tail line crosses zero strictly left of the
  // first node; an identically-zero tail is reported by its finite endpoint.
  {
    const double v0 = bps.front().value;
    const double s = d.left_tail_slope();
    if (std::abs(v0) > scale(bps.front().p) && s != 0.0) {
      const double r = bps.front().p - v0 / s;
      if (r < bps.front().p) roots.push_back(r);
    }
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (is_zero(i)) roots.push_back(bps[i].p);
    if (i + 1 < bps.size() && !is_zero(i) && !is_zero(i + 1) &&
        ((bps[i].value > 0) != (bps[i + 1].value > 0))) {
      const double t = bps[i].value / (bps[i].value - bps[i + 1].value);
      roots.push_back(bps[i].p + t * (bps[i + 1].p - bps[i].p));
    }
  }
  {
    const double vn = bps.back().value;
    const double s = d.right_tail_slope();
    if (std::abs(vn) > scale(bps.back().p) && s != 0.0) {
      const double r = bps.back().p - vn / s;
      if (r > bps.back().p) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) <= kTight; }),
              roots.end());
  return roots;
}

bool check_coercive(const PLFunction& h) {
  return h.left_tail_slope() < 0.0 && h.right_tail_slope() > 0.0;
}

bool check_semicoercive(const PLFunction& f) { return f.left_tail_slope() < 0.0; }

bool is_nonincreasing(const PLFunction& f) {
  for (double s : all_slopes(f))
    if (s > kTight) return false;
  return true;
}

bool is_strictly_decreasing(const PLFunction& f) {
  for (double s : all_slopes(f))
    if (s >= 0.0) return false;
  return true;
}

PLFunction decreasing_envelope(const PLFunction& h) {
  if (h.left_tail_slope() > 0.0)
    throw UnboundedError("decreasing_envelope: inf over (-inf,p] is -inf (left tail slope > 0)");
  const auto& bps = h.breakpoints();
  std::vector<Breakpoint> out;
  double m = bps.front().value;  // running minimum up to the current node
  out.push_back(bps.front());
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double va = bps[i].value;
    const double vb = bps[i + 1].value;
    const double a = bps[i].p;
    const double b = bps[i + 1].p;
    if (vb < m) {
      // the envelope is flat at m until H descends through it, then follows H
      if (va > m) {
        const double s = (vb - va) / (b - a);
        const double x = a + (m - va) / s;
        out.push_back({x, m});
      }
      out.push_back({b, vb});
      m = vb;
    } else {
      out.push_back({b, m});
    }
  }
  double right = 0.0;
  if (h.right_tail_slope() < 0.0) {
    const double vn = bps.back().value;
    if (vn > m) {
      const double x = bps.back().p + (m - vn) / h.right_tail_slope();
      out.push_back({x, m});
    }
    right = h.right_tail_slope();
  }
  return simplified(PLFunction(std::move(out), h.left_tail_slope(), right));
}

namespace {

// sup of H over [p, p0] as a function of p <= p0, built by walking
// breakpoints leftward from p0. The left tail of the result follows H once H
// exceeds every value seen so far (H is coercive).
std::vector<Breakpoint> running_sup_leftward(const PLFunction& h, double p0) {
  const auto& bps = h.breakpoints();
  std::vector<Breakpoint> rev;  // collected right-to-left
  double m = h(p0);
  rev.push_back({p0, m});
  double prev_p = p0;  // right end of the piece being examined
  double prev_v = m;
  // index of last breakpoint strictly left of p0
  long k = -1;
  for (long i = static_cast<long>(bps.size()) - 1; i >= 0; --i) {
    if (bps[i].p < p0) {
      k = i;
      break;
    }
  }
  for (; k >= 0; --k) {
    const double a = bps[k].p;
    const double va = bps[k].value;
    if (va > m) {
      // H rises above the running sup inside this piece; flat at m from the
      // crossing rightward, follows H to its left
      const double s = (prev_v - va) / (prev_p - a);
      const double x = a + (m - va) / s;
      if (x < rev.back().p - kTight && x > a + kTight) rev.push_back({x, m});
      rev.push_back({a, va});
      m = va;
    }
    prev_p = a;
    prev_v = va;
  }
  // left tail of H increases leftward; the sup follows it past the crossing
  if (p0 > bps.front().p && rev.back().p > bps.front().p + kTight) {
    const double a = bps.front().p;
    const double va = bps.front().value;
    if (va < m) {
      const double x = a + (m - va) / h.left_tail_slope();
      if (x < rev.back().p - kTight) rev.push_back({x, m});
    } else {
      rev.push_back({a, m});
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// inf of H over [p0, p] as a function of p >= p0, walking rightward.
std::vector<Breakpoint> running_inf_rightward(const PLFunction& h, double p0) {
  const auto& bps = h.breakpoints();
  std::vector<Breakpoint> out;
  double m = h(p0);
  out.push_back({p0, m});
  double prev_p = p0;
  double prev_v = m;
  std::size_t k = 0;
  while (k < bps.size() && bps[k].p <= p0) ++k;
  for (; k < bps.size(); ++k) {
    const double b = bps[k].p;
    const double vb = bps[k].value;
    if (vb < m) {
      const double s = (vb - prev_v) / (b - prev_p);
      const double x = prev_p + (m - prev_v) / s;
      if (x > out.back().p + kTight && x < b - kTight) out.push_back({x, m});
      out.push_back({b, vb});
      m = vb;
    }
    prev_p = b;
    prev_v = vb;
  }
  return out;
}

}  // namespace

PLFunction bln_flux(const PLFunction& h, double p0) {
  if (!check_coercive(h)) throw NotCoerciveError("bln_flux: H must be coercive");
  auto left = running_sup_leftward(h, p0);
  auto right = running_inf_rightward(h, p0);
  // join at p0 (both carry the node (p0, H(p0)))
  std::vector<Breakpoint> out = std::move(left);
  for (std::size_t i = 1; i < right.size(); ++i) out.push_back(right[i]);
  // left of the leftmost node the flux follows H's left tail; right of the
  // last node the running inf is constant
  return simplified(PLFunction(std::move(out), h.left_tail_slope(), 0.0));
}

}  // namespace hjhalf
